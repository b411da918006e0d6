from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from itertools import permutations, product
from typing import TYPE_CHECKING

from pydantic import BaseModel, Field

from features.algebra import ChainAlgebra, MVn
from features.syntax import Sequent, modal_depth_profile, variables
from schemas.enums import LocalCheck

from .evaluator import check_local_consequence_at
from .exceptions import BudgetExceededError, UnsupportedAlgebraError
from .model import KripkeModel
from .verdict import NoCounterexampleFound, Verdict, certify_countermodel

if TYPE_CHECKING:
    from features.algebra import AlgebraElement

logger = logging.getLogger("Workbench").getChild("Kripke")

ROOT = "w0"

type Relevance = Mapping[str, frozenset[int]]


class SearchBounds(BaseModel, frozen=True):
    max_worlds: int = Field(ge=1)
    transitive_only: bool = False
    node_budget: int | None = Field(default=None, ge=1)

    def describe(self, alg: ChainAlgebra) -> str:
        frames = "transitive models" if self.transitive_only else "models"
        return f"no countermodel among {frames} over {alg} with at most {self.max_worlds} worlds"


def world_names(k: int) -> tuple[str, ...]:
    return tuple(f"w{i}" for i in range(k))


def _is_transitive(pairs: frozenset[tuple[int, int]]) -> bool:
    return all((i, l) in pairs for i, j in pairs for j2, l in pairs if j == j2)


def _reaches_everything(k: int, pairs: frozenset[tuple[int, int]]) -> bool:
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for source, target in pairs:
            if source == i and target not in seen:
                seen.add(target)
                frontier.append(target)
    return len(seen) == k


def rooted_relations(k: int, *, transitive_only: bool = False) -> Iterator[frozenset[tuple[int, int]]]:
    """Relations on k worlds where every world is reachable from world 0.

    Bitmasks ascend with bit i*k + j standing for the pair (i, j). Only the
    bitmask-minimal member of each orbit under permutations fixing world 0 is yielded.
    """
    all_pairs = [(i, j) for i in range(k) for j in range(k)]
    relabelings = [(0, *perm) for perm in permutations(range(1, k))]

    for mask in range(1 << (k * k)):
        pairs = frozenset(pair for bit, pair in enumerate(all_pairs) if mask >> bit & 1)
        if not _reaches_everything(k, pairs):
            continue
        if transitive_only and not _is_transitive(pairs):
            continue
        if any(sum(1 << (relabel[i] * k + relabel[j]) for i, j in pairs) < mask for relabel in relabelings):
            continue
        yield pairs


def _path_lengths(k: int, pairs: frozenset[tuple[int, int]], horizon: int) -> list[set[int]]:
    lengths: list[set[int]] = [set() for _ in range(k)]
    frontier = {0}
    for step in range(horizon + 1):
        for i in frontier:
            lengths[i].add(step)
        frontier = {target for source, target in pairs if source in frontier}
        if not frontier:
            break
    return lengths


def enumerate_models(
    alg: ChainAlgebra,
    max_worlds: int,
    names: tuple[str, ...],
    *,
    transitive_only: bool = False,
    relevance: Relevance | None = None,
) -> Iterator[KripkeModel]:
    """Rooted MV_n models up to `max_worlds` worlds, world `w0` first.

    Order: world count ascending, then relation bitmask, then valuations
    lexicographic in Index order over (world, variable) positions. Positions a
    variable cannot influence at `w0` under `relevance` stay at bottom.
    """
    if not isinstance(alg, MVn):
        msg = f"Model enumeration needs a finite MV_n chain, got {alg}"
        raise UnsupportedAlgebraError(msg)

    carrier = alg.carrier()
    names = tuple(sorted(names))
    horizon = max((max(levels) for levels in relevance.values() if levels), default=0) if relevance else 0

    for k in range(1, max_worlds + 1):
        worlds = world_names(k)
        logger.debug("Enumerating %d-world models over %s", k, alg)
        for pairs in rooted_relations(k, transitive_only=transitive_only):
            relation = frozenset((worlds[i], worlds[j]) for i, j in pairs)
            lengths = _path_lengths(k, pairs, horizon)
            positions = [
                (worlds[i], name)
                for i in range(k)
                for name in names
                if relevance is None or relevance.get(name, frozenset()) & lengths[i]
            ]
            for values in product(carrier, repeat=len(positions)):
                valuation: dict[str, dict[str, AlgebraElement]] = {}
                for (world, name), value in zip(positions, values, strict=True):
                    if value != alg.bottom:
                        valuation.setdefault(world, {})[name] = value
                yield KripkeModel(alg, worlds, relation, valuation)


def search_countermodel(s: Sequent, alg: ChainAlgebra, bounds: SearchBounds) -> Verdict:
    """Bounded search for a world where all premises are top and the conclusion is not.

    Never concludes that the sequent holds; an exhausted search reports NoCounterexampleFound.
    """
    formulas = s.formulas
    models = enumerate_models(
        alg,
        bounds.max_worlds,
        variables(formulas),
        transitive_only=bounds.transitive_only,
        relevance=modal_depth_profile(formulas),
    )

    examined = 0
    for model in models:
        examined += 1
        if bounds.node_budget is not None and examined > bounds.node_budget:
            logger.warning("Search stopped after %d models", bounds.node_budget)
            raise BudgetExceededError(bounds.node_budget)

        if check_local_consequence_at(model, ROOT, s).outcome == LocalCheck.CONCLUSION_FAILS:
            logger.info("Countermodel found after %d models", examined)
            return certify_countermodel(model, ROOT, s)

    logger.info("Examined %d models without a countermodel", examined)
    return NoCounterexampleFound(bounds.describe(alg))
