from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from schemas.enums import LocalCheck

from .evaluator import check_local_consequence_at
from .exceptions import CertificateError

if TYPE_CHECKING:
    from features.algebra import AlgebraElement
    from features.syntax import Sequent

    from .model import KripkeModel

logger = logging.getLogger("Workbench").getChild("Kripke")


@dataclass(frozen=True)
class Holds:
    pass


@dataclass(frozen=True)
class Countermodel:
    model: KripkeModel
    world: str
    conclusion_value: AlgebraElement


@dataclass(frozen=True)
class NoCounterexampleFound:
    bound: str


type Verdict = Holds | Countermodel | NoCounterexampleFound


def certify_countermodel(model: KripkeModel, world: str, s: Sequent) -> Countermodel:
    """Re-check that every premise is top at `world` and the conclusion is not."""
    result = check_local_consequence_at(model, world, s)
    if result.outcome != LocalCheck.CONCLUSION_FAILS or result.value is None:
        msg = f"Countermodel at {world!r} failed re-verification: {result.outcome}"
        raise CertificateError(msg)

    logger.debug("Certified countermodel at %s with conclusion value %s", world, result.value)
    return Countermodel(model, world, result.value)
