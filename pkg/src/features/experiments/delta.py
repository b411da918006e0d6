from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from features.algebra import ChainAlgebra, MVn
from features.kripke import ROOT, BudgetExceededError, KripkeModel, enumerate_models, holds_at
from features.syntax import Delta, Formula, Impl, Power, modal_depth_profile, neg, variables

from .exceptions import DomainError

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable

logger = logging.getLogger("Workbench").getChild("Experiments")

DEDUCTION_CHECK = "delta-deduction"
BRIDGE_CHECK = "bridge-duality"


def delta_deduction_transform(gamma: Formula, phi: Formula) -> Formula:
    """Δγ → φ, which is valid exactly when γ ⊢ φ."""
    return Impl(Delta(gamma), phi)


def sat_validity_bridge(phi: Formula) -> Formula:
    """¬Δφ, which is locally satisfiable exactly when φ is not valid."""
    return neg(Delta(phi))


@dataclass(frozen=True)
class DeltaCheckResult:
    check: str
    algebra: ChainAlgebra
    max_worlds: int
    models_checked: int
    worlds_checked: int
    counterexample: tuple[KripkeModel, str] | None

    @property
    def holds(self) -> bool:
        return self.counterexample is None


def _pointwise(
    check: str,
    formulas: Iterable[Formula],
    n: int,
    max_worlds: int,
    agree: Callable[[KripkeModel, str], bool],
) -> DeltaCheckResult:
    alg = MVn(n)
    models_checked = worlds_checked = 0
    for model in enumerate_models(alg, max_worlds, variables(tuple(formulas))):
        models_checked += 1
        for world in model.worlds:
            worlds_checked += 1
            if not agree(model, world):
                logger.warning("%s fails at %s after %d models", check, world, models_checked)
                return DeltaCheckResult(check, alg, max_worlds, models_checked, worlds_checked, (model, world))

    logger.info("%s holds on %d models, %d worlds", check, models_checked, worlds_checked)
    return DeltaCheckResult(check, alg, max_worlds, models_checked, worlds_checked, None)


def delta_deduction_check(gamma: Formula, phi: Formula, n: int, max_worlds: int) -> DeltaCheckResult:
    """At every world of every enumerated MV_n model: γ = 1 implies φ = 1 exactly when Δγ → φ = 1."""
    transformed = delta_deduction_transform(gamma, phi)

    def agree(model: KripkeModel, world: str) -> bool:
        entails = not holds_at(model, world, gamma) or holds_at(model, world, phi)
        return entails == holds_at(model, world, transformed)

    return _pointwise(DEDUCTION_CHECK, (gamma, phi), n, max_worlds, agree)


def bridge_duality_check(phi: Formula, n: int, max_worlds: int) -> DeltaCheckResult:
    """At every world of every enumerated MV_n model: φ = 1 exactly when ¬Δφ = 0."""
    bridged = sat_validity_bridge(phi)

    def agree(model: KripkeModel, world: str) -> bool:
        return holds_at(model, world, phi) == holds_at(model, world, neg(bridged))

    return _pointwise(BRIDGE_CHECK, (phi,), n, max_worlds, agree)


@dataclass(frozen=True)
class SatWitness:
    model: KripkeModel
    world: str


def local_sat_search(
    phi: Formula,
    alg: ChainAlgebra,
    max_worlds: int,
    *,
    transitive_only: bool = False,
    node_budget: int | None = None,
) -> SatWitness | None:
    """First enumerated rooted model whose root gives φ the value 1, or None within the bounds."""
    models = enumerate_models(
        alg,
        max_worlds,
        variables(phi),
        transitive_only=transitive_only,
        relevance=modal_depth_profile(phi),
    )
    for examined, model in enumerate(models, start=1):
        if node_budget is not None and examined > node_budget:
            raise BudgetExceededError(node_budget)
        if holds_at(model, ROOT, phi):
            logger.info("Satisfied after %d models", examined)
            return SatWitness(model, ROOT)
    return None


def deduction_exponent(model: KripkeModel, gamma: Formula, phi: Formula, max_exponent: int = 64) -> int | None:
    """Least m with γ^m → φ = 1 at every world of `model`, or None if none up to `max_exponent`.

    Such an m exists only if φ = 1 wherever γ = 1 in the model; it depends on the model.
    """
    if max_exponent < 1:
        msg = f"Exponent bound must be at least 1, got {max_exponent}"
        raise DomainError(msg)
    if not all(holds_at(model, w, phi) for w in model.worlds if holds_at(model, w, gamma)):
        return None
    for m in range(1, max_exponent + 1):
        if all(holds_at(model, w, Impl(Power(gamma, m), phi)) for w in model.worlds):
            return m
    return None
