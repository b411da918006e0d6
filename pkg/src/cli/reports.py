from __future__ import annotations

from typing import TYPE_CHECKING

from features.kripke import Countermodel, Holds, NoCounterexampleFound, countermodel_certificate
from features.lukdecide import Countervaluation, Valid
from features.syntax import Sequent, parse, to_text
from schemas.enums import VerdictKind
from schemas.models import CountervaluationCertificate, SequentDocument, VerdictReport
from utils.rationals import format_fraction

if TYPE_CHECKING:
    from features.kripke import Verdict
    from features.lukdecide import PropVerdict


def sequent_from_document(doc: SequentDocument) -> Sequent:
    return Sequent(tuple(parse(premise) for premise in doc.premises), parse(doc.conclusion))


def sequent_to_document(s: Sequent) -> SequentDocument:
    return SequentDocument(premises=[to_text(premise) for premise in s.premises], conclusion=to_text(s.conclusion))


def verdict_report(verdict: Verdict, s: Sequent) -> VerdictReport:
    match verdict:
        case Holds():
            return VerdictReport(verdict=VerdictKind.HOLDS)
        case Countermodel():
            return VerdictReport(verdict=VerdictKind.COUNTERMODEL, countermodel=countermodel_certificate(verdict, s))
        case NoCounterexampleFound(bound=bound):
            return VerdictReport(verdict=VerdictKind.NO_COUNTEREXAMPLE_FOUND, bound=bound)


def prop_verdict_report(verdict: PropVerdict) -> VerdictReport:
    match verdict:
        case Valid():
            return VerdictReport(verdict=VerdictKind.VALID)
        case Countervaluation(valuation=valuation, gap=gap):
            certificate = CountervaluationCertificate(
                valuation={name: format_fraction(value) for name, value in sorted(valuation.items())},
                gap=format_fraction(gap),
            )
            return VerdictReport(verdict=VerdictKind.COUNTERVALUATION, countervaluation=certificate)
