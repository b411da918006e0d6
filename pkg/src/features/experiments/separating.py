from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from features.algebra import AlgebraElement, LukRational, MVn, RationalValue
from features.kripke import KripkeModel, SearchBounds, Verdict, evaluate, search_countermodel
from features.syntax import ZERO, Box, Diamond, Join, Power, Sequent, Var, iff, neg

from .exceptions import DomainError

logger = logging.getLogger("Workbench").getChild("Experiments")


def separating_sequent() -> Sequent:
    """x ↔ (□x)², □(x ↔ (□x)²), ¬◇□0 ⊢ ¬x ∨ x.

    Holds in every transitive model over a finite MV chain, fails on the ω-chain over [0, 1].
    """
    x = Var("x")
    fixpoint = iff(x, Power(Box(x), 2))
    return Sequent((fixpoint, Box(fixpoint), neg(Diamond(Box(ZERO)))), Join(neg(x), x))


def omega_chain_closed_form(alpha: Fraction, n: int) -> Fraction:
    return 1 - (1 - alpha) / 2**n


@dataclass(frozen=True)
class OmegaChainRecord:
    world: int
    x: Fraction
    box_x_squared: Fraction
    increasing: bool
    below_one: bool
    fixpoint: bool
    no_dead_end: bool
    closed_form: bool

    @property
    def passed(self) -> bool:
        return self.increasing and self.below_one and self.fixpoint and self.no_dead_end and self.closed_form


@dataclass(frozen=True)
class OmegaChainReport:
    """Identities of the ω-chain model checked on worlds 0..depth.

    The model has worlds ℕ, n R m for n < m, and e(n+1, x) = (e(n, x) + 1) / 2. Values come from
    evaluating the depth-bounded model built by `omega_chain_model`.
    """

    alpha: Fraction
    depth: int
    records: tuple[OmegaChainRecord, ...]
    premise_values: tuple[Fraction, ...]
    conclusion_value: Fraction

    @property
    def valid(self) -> bool:
        return (
            all(record.passed for record in self.records)
            and all(value == 1 for value in self.premise_values)
            and self.conclusion_value < 1
        )


def omega_chain_model(alpha: Fraction, depth: int, *, capped: bool = True) -> KripkeModel:
    """Worlds 0..depth+1 of the ω-chain over [0, 1]_Ł, named by their position.

    When `capped`, the last world sees itself, so every world keeps a successor as in the full chain.
    """
    worlds = [str(n) for n in range(depth + 2)]
    relation = [(worlds[n], worlds[m]) for n in range(len(worlds)) for m in range(n + 1, len(worlds))]
    if capped:
        relation.append((worlds[-1], worlds[-1]))

    valuation: dict[str, dict[str, AlgebraElement]] = {}
    value = alpha
    for world in worlds:
        valuation[world] = {"x": RationalValue(value)}
        value = (value + 1) / 2
    return KripkeModel.build(LukRational(), worlds, relation, valuation)


def omega_chain_check(alpha: Fraction, depth: int, *, capped: bool = True) -> OmegaChainReport:
    if not 0 < alpha < 1:
        msg = f"Initial value must lie strictly between 0 and 1, got {alpha}"
        raise DomainError(msg)
    if depth < 1:
        msg = f"Depth must be at least 1, got {depth}"
        raise DomainError(msg)

    model = omega_chain_model(alpha, depth, capped=capped)
    alg = model.algebra
    s = separating_sequent()
    fixpoint, _, no_dead_end = s.premises
    box_x = Box(Var("x"))

    records: list[OmegaChainRecord] = []
    fixpoints: list[AlgebraElement] = []
    serial: list[AlgebraElement] = []
    for n, world in enumerate(model.worlds[: depth + 1]):
        x = model.value(world, "x")
        boxed = evaluate(model, world, box_x)
        squared = alg.power(boxed, 2)
        fixpoints.append(evaluate(model, world, fixpoint))
        serial.append(evaluate(model, world, no_dead_end))
        records.append(
            OmegaChainRecord(
                world=n,
                x=alg.to_rational(x),
                box_x_squared=alg.to_rational(squared),
                increasing=alg.lt(x, boxed),
                below_one=alg.lt(boxed, alg.top),
                fixpoint=squared == x,
                no_dead_end=serial[-1] == alg.top,
                closed_form=alg.to_rational(x) == omega_chain_closed_form(alpha, n),
            ),
        )

    # □ at world 0 ranges over worlds 1..depth
    box_fixpoint: AlgebraElement = alg.top
    for value in fixpoints[1:]:
        box_fixpoint = alg.meet(box_fixpoint, value)

    root = model.worlds[0]
    report = OmegaChainReport(
        alpha=alpha,
        depth=depth,
        records=tuple(records),
        premise_values=tuple(alg.to_rational(value) for value in (fixpoints[0], box_fixpoint, serial[0])),
        conclusion_value=alg.to_rational(evaluate(model, root, s.conclusion)),
    )
    logger.info("ω-chain check from %s to depth %d: %s", alpha, depth, "passed" if report.valid else "failed")
    return report


def mvn_separating_search(n: int, max_worlds: int, node_budget: int | None = None) -> Verdict:
    """Bounded transitive search for a finite-chain countermodel of the separating sequent.

    Finding nothing is a consistency check on the bound, not a proof.
    """
    bounds = SearchBounds(max_worlds=max_worlds, transitive_only=True, node_budget=node_budget)
    return search_countermodel(separating_sequent(), MVn(n), bounds)
