from __future__ import annotations

import logging
from collections.abc import Mapping
from fractions import Fraction
from math import lcm

from features.algebra import Index, LukRational, MVn, RationalValue
from features.kripke import CertificateError, Holds, KripkeModel, Verdict, certify_countermodel, evaluate
from features.syntax import Formula, Sequent, variables

from .branch_and_bound import PropVerdict, Valid, solve_milp
from .config import EngineConfig
from .exceptions import CountervaluationError
from .milp import encode_milp
from .unfolding import ROOT, PropSequent, WitnessTree, unfold, variable_name

logger = logging.getLogger("Workbench").getChild("LukDecide")

_ASSIGNMENT = "h"


def evaluate_prop(f: Formula, valuation: Mapping[str, Fraction]) -> Fraction:
    """Łukasiewicz value of a modality-free formula; unassigned variables are 0."""
    model = KripkeModel.build(
        LukRational(),
        [_ASSIGNMENT],
        valuation={_ASSIGNMENT: {name: RationalValue(value) for name, value in valuation.items()}},
    )
    result = evaluate(model, _ASSIGNMENT, f)
    return model.algebra.to_rational(result)


def prop_decide(ps: PropSequent, config: EngineConfig | None = None) -> PropVerdict:
    verdict = solve_milp(encode_milp(ps), config)
    if isinstance(verdict, Valid):
        return verdict

    valuation = verdict.valuation
    if any(evaluate_prop(p, valuation) != 1 for p in ps.premises):
        msg = "Countervaluation leaves a premise below 1"
        raise CountervaluationError(msg)
    if evaluate_prop(ps.conclusion, valuation) != 1 - verdict.gap:
        msg = f"Countervaluation does not reach the reported gap {verdict.gap}"
        raise CountervaluationError(msg)
    return verdict


def reconstruct_model(tree: WitnessTree, valuation: Mapping[str, Fraction], names: tuple[str, ...]) -> KripkeModel:
    """Witness tree as a Kripke model over [0, 1]: parent-to-witness edges, e(w, x) = h(x_w)."""
    model_valuation: dict[str, dict[str, RationalValue]] = {}
    for world in tree.worlds:
        values = {
            name: RationalValue(valuation[variable_name(name, world)])
            for name in names
            if valuation.get(variable_name(name, world))
        }
        if values:
            model_valuation[world] = values
    return KripkeModel.build(LukRational(), tree.worlds, tree.edges(), model_valuation)


def check_reconstruction(model: KripkeModel, tree: WitnessTree, valuation: Mapping[str, Fraction]) -> bool:
    """e(w, ψ) = h(ψ♯(w)) for every world and every formula translated there."""
    for world in tree.worlds:
        for f in tree.closure(world):
            expected = evaluate_prop(tree.translate(f, world), valuation)
            if model.algebra.to_rational(evaluate(model, world, f)) != expected:
                logger.debug("Reconstruction mismatch at %s", world)
                return False
    return True


def decide(s: Sequent, config: EngineConfig | None = None) -> Verdict:
    """Decide local consequence over all Łukasiewicz Kripke models."""
    tree, prop = unfold(s)
    verdict = prop_decide(prop, config)
    if isinstance(verdict, Valid):
        logger.info("Sequent holds")
        return Holds()

    model = reconstruct_model(tree, verdict.valuation, variables(s.formulas))
    if not check_reconstruction(model, tree, verdict.valuation):
        msg = "Reconstructed model disagrees with the countervaluation"
        raise CertificateError(msg)
    countermodel = certify_countermodel(model, ROOT, s)
    logger.info("Countermodel with %d worlds, conclusion value %s", len(model.worlds), countermodel.conclusion_value)
    return countermodel


def finite_chain_countermodel(model: KripkeModel) -> KripkeModel:
    """The same model over MV_n, n the least common multiple of the value denominators."""
    values = [
        model.algebra.to_rational(value) for assignment in model.valuation.values() for value in assignment.values()
    ]
    n = lcm(1, *(v.denominator for v in values))
    alg = MVn(n)
    valuation = {
        world: {name: Index(int(model.algebra.to_rational(value) * n)) for name, value in assignment.items()}
        for world, assignment in model.valuation.items()
    }
    return KripkeModel.build(alg, model.worlds, model.relation, valuation)
