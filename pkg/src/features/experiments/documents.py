from __future__ import annotations

from typing import TYPE_CHECKING

from features.kripke import model_to_document
from features.syntax import to_text
from schemas.models import DeltaCheckReport, OmegaChainDocument, OmegaChainEntry, SatReport
from utils.rationals import format_fraction

if TYPE_CHECKING:
    from features.algebra import ChainAlgebra
    from features.syntax import Formula

    from .delta import DeltaCheckResult, SatWitness
    from .separating import OmegaChainReport


def omega_chain_document(report: OmegaChainReport) -> OmegaChainDocument:
    return OmegaChainDocument(
        alpha=format_fraction(report.alpha),
        depth=report.depth,
        records=[
            OmegaChainEntry(
                world=record.world,
                x=format_fraction(record.x),
                box_x_squared=format_fraction(record.box_x_squared),
                increasing=record.increasing,
                below_one=record.below_one,
                fixpoint=record.fixpoint,
                no_dead_end=record.no_dead_end,
                closed_form=record.closed_form,
            )
            for record in report.records
        ],
        premise_values=[format_fraction(value) for value in report.premise_values],
        conclusion_value=format_fraction(report.conclusion_value),
        valid=report.valid,
    )


def delta_check_report(result: DeltaCheckResult) -> DeltaCheckReport:
    model, world = result.counterexample or (None, None)
    return DeltaCheckReport(
        check=result.check,
        algebra=result.algebra.describe(),
        max_worlds=result.max_worlds,
        models_checked=result.models_checked,
        worlds_checked=result.worlds_checked,
        holds=result.holds,
        counterexample=None if model is None else model_to_document(model),
        world=world,
    )


def sat_report(
    phi: Formula,
    alg: ChainAlgebra,
    max_worlds: int,
    witness: SatWitness | None,
    *,
    transitive_only: bool = False,
) -> SatReport:
    return SatReport(
        formula=to_text(phi),
        algebra=alg.describe(),
        max_worlds=max_worlds,
        transitive_only=transitive_only,
        model=None if witness is None else model_to_document(witness.model),
        world=None if witness is None else witness.world,
    )
