from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from math import prod

from features.syntax import (
    Binary,
    Box,
    Const0,
    Const1,
    Delta,
    Diamond,
    Formula,
    Impl,
    Power,
    Sequent,
    Var,
    contains_delta,
    contains_modality,
    iff,
    normalize_to_diamond,
    psfm,
    to_text,
    variables,
)

from .exceptions import DeltaNotSupportedError, ModalFormulaError

logger = logging.getLogger("Workbench").getChild("LukDecide")

ROOT = "w0"


@dataclass(frozen=True)
class PropSequent:
    """Modality-free sequent over witness-indexed variables."""

    premises: tuple[Formula, ...]
    conclusion: Formula

    def __post_init__(self) -> None:
        if contains_modality((*self.premises, self.conclusion)):
            msg = "Propositional sequents cannot contain □ or ◇"
            raise ModalFormulaError(msg)

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return (*self.premises, self.conclusion)

    @property
    def variables(self) -> tuple[str, ...]:
        return variables(self.formulas)


def _diamonds(formulas: Iterable[Formula]) -> tuple[Diamond, ...]:
    found = {f for f in psfm(tuple(formulas)) if isinstance(f, Diamond)}
    return tuple(sorted(found, key=to_text))


def variable_name(name: str, world: str) -> str:
    return f"{name}@{world}"


@dataclass(frozen=True)
class WitnessTree:
    """Abstract worlds of the unfolding, one witness per (world, ◇-formula of its level).

    `sigma[i]` lists the diamond formulas evaluated at level i; `levels[i]` the worlds at that level.
    """

    root_formulas: tuple[Formula, ...]
    sigma: tuple[tuple[Diamond, ...], ...]
    levels: tuple[tuple[str, ...], ...]
    children: Mapping[tuple[str, Diamond], str]
    parents: Mapping[str, tuple[str, Diamond]]

    @classmethod
    def grow(cls, formulas: Iterable[Formula]) -> WitnessTree:
        root_formulas = tuple(formulas)
        sigma = [_diamonds(root_formulas)]
        while sigma[-1]:
            sigma.append(_diamonds(d.body for d in sigma[-1]))

        levels: list[tuple[str, ...]] = [(ROOT,)]
        children: dict[tuple[str, Diamond], str] = {}
        parents: dict[str, tuple[str, Diamond]] = {}
        counter = 1
        for diamonds in sigma[:-1]:
            level: list[str] = []
            for parent in levels[-1]:
                for d in diamonds:
                    child = f"w{counter}"
                    counter += 1
                    children[parent, d] = child
                    parents[child] = (parent, d)
                    level.append(child)
            levels.append(tuple(level))
        return cls(root_formulas, tuple(sigma), tuple(levels), children, parents)

    @property
    def worlds(self) -> tuple[str, ...]:
        return tuple(w for level in self.levels for w in level)

    @property
    def depth(self) -> int:
        return len(self.sigma) - 1

    @property
    def size(self) -> int:
        return sum(prod(len(s) for s in self.sigma[:i]) for i in range(len(self.sigma)))

    def level_of(self, world: str) -> int:
        return next(i for i, level in enumerate(self.levels) if world in level)

    def diamonds_at(self, world: str) -> tuple[Diamond, ...]:
        return self.sigma[self.level_of(world)]

    def successors(self, world: str) -> tuple[str, ...]:
        return tuple(self.children[world, d] for d in self.diamonds_at(world))

    def edges(self) -> list[tuple[str, str]]:
        return [(parent, child) for child, (parent, _) in self.parents.items()]

    def diamond_name(self, world: str, d: Diamond) -> str:
        return f"dia{self.diamonds_at(world).index(d)}@{world}"

    def closure(self, world: str) -> frozenset[Formula]:
        """Formulas translated at `world`: the sequent at the root, the ◇-bodies of the parent level elsewhere."""
        if world == ROOT:
            return psfm(self.root_formulas)
        parent, _ = self.parents[world]
        return psfm(d.body for d in self.diamonds_at(parent))

    def translate(self, f: Formula, world: str) -> Formula:
        """f♯(world): variables and ◇-formulas become witness-indexed variables."""
        match f:
            case Const0() | Const1():
                return f
            case Var(name=name):
                return Var(variable_name(name, world))
            case Diamond():
                return Var(self.diamond_name(world, f))
            case Binary(left=left, right=right):
                return type(f)(self.translate(left, world), self.translate(right, world))
            case Power(body=body, exponent=exponent):
                return Power(self.translate(body, world), exponent)
            case Box():
                msg = f"□ left after normalization: {to_text(f)}"
                raise ModalFormulaError(msg)
            case Delta():
                raise DeltaNotSupportedError

    def witness_clauses(self) -> list[Formula]:
        """Each ◇ψ at w equals ψ at its witness, and ψ at every sibling is at most that."""
        clauses: list[Formula] = []
        for world in self.worlds:
            diamonds = self.diamonds_at(world)
            for d in diamonds:
                target = self.translate(d.body, self.children[world, d])
                clauses.append(iff(Var(self.diamond_name(world, d)), target))
                clauses.extend(
                    Impl(self.translate(d.body, self.children[world, other]), target)
                    for other in diamonds
                    if other != d
                )
        return clauses


def unfold(s: Sequent) -> tuple[WitnessTree, PropSequent]:
    """Propositional Łukasiewicz sequent that holds iff `s` holds locally in every Łukasiewicz Kripke model."""
    if contains_delta(s.formulas):
        raise DeltaNotSupportedError

    premises = tuple(normalize_to_diamond(p) for p in s.premises)
    conclusion = normalize_to_diamond(s.conclusion)
    tree = WitnessTree.grow((*premises, conclusion))

    translated = [tree.translate(p, ROOT) for p in premises]
    translated.extend(tree.witness_clauses())
    prop = PropSequent(tuple(dict.fromkeys(translated)), tree.translate(conclusion, ROOT))

    logger.debug(
        "Unfolded to |Σ| = %s, |W| = %d, %d variables",
        [len(level) for level in tree.sigma],
        len(tree.worlds),
        len(prop.variables),
    )
    return tree, prop
