from __future__ import annotations

from dataclasses import replace
from typing import TYPE_CHECKING

from features.syntax import Box, Diamond, Formula, subformulas

from .evaluator import evaluate

if TYPE_CHECKING:
    from collections.abc import Iterable

    from .model import KripkeModel


def is_transitive(m: KripkeModel) -> bool:
    return all((u, w) in m.relation for u, v in m.relation for w in m.successors(v))


def transitive_closure(m: KripkeModel) -> KripkeModel:
    """Least transitive superset of the relation, computed Warshall style."""
    reach = {u: {w for w in m.worlds if (u, w) in m.relation} for u in m.worlds}
    for k in m.worlds:
        for u in m.worlds:
            if k in reach[u]:
                reach[u] |= reach[k]

    closed = frozenset((u, w) for u in m.worlds for w in reach[u])
    if closed == m.relation:
        return m
    return replace(m, relation=closed)


def reachable(m: KripkeModel, root: str) -> tuple[str, ...]:
    """Worlds reachable from `root` in breadth-first order, `root` first."""
    m.require(root)
    order = [root]
    seen = {root}
    for world in order:
        for successor in m.successors(world):
            if successor not in seen:
                seen.add(successor)
                order.append(successor)
    return tuple(order)


def generated_submodel(m: KripkeModel, root: str) -> KripkeModel:
    """Submodel on the worlds reachable from `root`. Values of every formula at `root` are kept."""
    kept = reachable(m, root)
    keep = set(kept)
    return m.build(
        m.algebra,
        kept,
        (pair for pair in m.relation if pair[0] in keep),
        {world: values for world, values in m.valuation.items() if world in keep},
    )


def depth(m: KripkeModel, w: str) -> int | None:
    """Length of the longest path leaving `w`; None when `w` reaches a cycle."""
    m.require(w)
    memo: dict[str, int | None] = {}
    on_path: set[str] = set()

    def visit(u: str) -> int | None:
        if u in memo:
            return memo[u]
        if u in on_path:
            return None
        on_path.add(u)
        longest: int | None = 0
        for successor in m.successors(u):
            below = visit(successor)
            if below is None:
                longest = None
                break
            longest = max(longest, below + 1)
        on_path.discard(u)
        memo[u] = longest
        return longest

    return visit(w)



def is_chain_frame(m: KripkeModel, root: str) -> bool:
    """W = {root, u_1..u_k}, R = {(root, u_i)} ∪ {(u_i, u_j): j < i}, with u_i in world order after root."""
    m.require(root)
    chain = [world for world in m.worlds if world != root]
    expected = {(root, u) for u in chain}
    expected |= {(chain[i], chain[j]) for i in range(len(chain)) for j in range(i)}
    return m.relation == expected


def witness(m: KripkeModel, v: str, f: Box | Diamond) -> str | None:
    """First successor attaining the □ infimum or the ◇ supremum of `f` at `v`."""
    successors = m.successors(v)
    if not successors:
        return None

    target = evaluate(m, v, f)
    for w in successors:
        if evaluate(m, w, f.body) == target:
            return w
    return None


def is_witnessed(m: KripkeModel, formulas: Iterable[Formula]) -> bool:
    """Every modal subformula is attained at a successor of every world, or the world has none."""
    modal = [sub for sub in subformulas(list(formulas)) if isinstance(sub, Box | Diamond)]
    return all(not m.successors(v) or witness(m, v, f) is not None for v in m.worlds for f in modal)
