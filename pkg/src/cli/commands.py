from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from features.algebra import parse_algebra
from features.experiments import (
    bridge_duality_check,
    delta_check_report,
    delta_deduction_check,
    local_sat_search,
    mvn_separating_search,
    omega_chain_check,
    omega_chain_document,
    sat_report,
    separating_sequent,
)
from features.kripke import (
    Countermodel,
    certify_countermodel,
    evaluate,
    model_from_document,
    model_to_document,
    search_countermodel,
)
from features.lukdecide import (
    Countervaluation,
    DeltaNotSupportedError,
    PropSequent,
    check_smt_well_formed,
    decide,
    emit_smt,
    encode_milp,
    prop_decide,
    unfold,
)
from features.pcp import (
    ROOT,
    NotFoundWithinBound,
    brute_force_solve,
    build_countermodel,
    check_reduction_model,
    instance_from_document,
    reduction_sequent,
    verify_characterization,
)
from features.syntax import contains_delta, parse, to_text
from schemas.enums import ExitCode, Logic
from schemas.models import (
    DeltaSuiteReport,
    EvalReport,
    ModelDocument,
    PcpInstanceDocument,
    PcpSolveReport,
    PcpVerifyReport,
    SequentDocument,
    SmtReport,
)
from utils.model_file import ModelFile, ModelFileError
from utils.rationals import parse_fraction

from .reports import prop_verdict_report, sequent_from_document, sequent_to_document, verdict_report

if TYPE_CHECKING:
    import argparse
    from collections.abc import Callable
    from pathlib import Path

    from features.kripke import KripkeModel, Verdict
    from features.lukdecide import EngineConfig, MilpEncoding
    from features.pcp import PcpInstance
    from features.syntax import Sequent
    from pydantic import BaseModel

    from .config import RunConfig

logger = logging.getLogger("Workbench").getChild("Cli")


@dataclass(frozen=True)
class Outcome:
    report: BaseModel
    code: ExitCode


type Handler = Callable[[RunConfig, argparse.Namespace], Outcome]


def _found(found: bool) -> ExitCode:  # noqa: FBT001
    return ExitCode.FOUND if found else ExitCode.OK


def _load_sequent(path: Path) -> Sequent:
    return sequent_from_document(ModelFile(SequentDocument, path, logger).load())


def _load_instance(path: Path) -> PcpInstance:
    return instance_from_document(ModelFile(PcpInstanceDocument, path, logger).load())


def _load_model(path: Path) -> KripkeModel:
    return model_from_document(ModelFile(ModelDocument, path, logger).load())


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        msg = f"Failed to read {path}"
        raise ModelFileError(msg) from e


def _write_text(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        msg = f"Failed to write {path}"
        raise ModelFileError(msg) from e
    logger.info("Wrote %s", path)


def _algebra(run: RunConfig) -> str:
    if run.algebra is None:
        msg = f"{' '.join(run.command)} needs --algebra"
        raise ModelFileError(msg)
    return run.algebra


# --- Modal and propositional decisions ---


def run_eval(run: RunConfig, args: argparse.Namespace) -> Outcome:
    model = _load_model(run.input("model"))
    formula = parse(args.formula)
    value = evaluate(model, args.world, formula)
    report = EvalReport(world=args.world, formula=to_text(formula), value=model.algebra.format_element(value))
    return Outcome(report, ExitCode.OK)


_DECIDERS: dict[Logic, Callable[[Sequent, EngineConfig], Verdict]] = {Logic.KLUK: decide}


def run_decide(run: RunConfig, args: argparse.Namespace) -> Outcome:
    s = _load_sequent(run.input("sequent"))
    if contains_delta(s.formulas):
        if "emit_smt" in run.inputs:
            msg = "SMT export unsupported for Δ"
            raise DeltaNotSupportedError(msg)
        logger.warning("Δ is outside the decision procedure; falling back to bounded search over %s", run.algebra)
        verdict = search_countermodel(s, parse_algebra(_algebra(run)), run.search_bounds())
    else:
        if (smt_path := run.inputs.get("emit_smt")) is not None:
            _write_text(smt_path, _smt_script(s)[1])
        verdict = _DECIDERS[args.logic](s, run.engine_config())
    return Outcome(verdict_report(verdict, s), _found(isinstance(verdict, Countermodel)))


def run_prop_decide(run: RunConfig, _: argparse.Namespace) -> Outcome:
    s = _load_sequent(run.input("sequent"))
    verdict = prop_decide(PropSequent(s.premises, s.conclusion), run.engine_config())
    return Outcome(prop_verdict_report(verdict), _found(isinstance(verdict, Countervaluation)))


def run_search(run: RunConfig, _: argparse.Namespace) -> Outcome:
    s = _load_sequent(run.input("sequent"))
    verdict = search_countermodel(s, parse_algebra(_algebra(run)), run.search_bounds())
    return Outcome(verdict_report(verdict, s), _found(isinstance(verdict, Countermodel)))


def _smt_script(s: Sequent) -> tuple[MilpEncoding, str]:
    _, prop = unfold(s)
    enc = encode_milp(prop)
    script = emit_smt(enc)
    check_smt_well_formed(script)
    return enc, script


def run_emit_smt(run: RunConfig, _: argparse.Namespace) -> Outcome:
    enc, script = _smt_script(_load_sequent(run.input("sequent")))

    output = run.inputs.get("output")
    if output is not None:
        _write_text(output, script)
    report = SmtReport(
        variables=len(enc.variables),
        binaries=len(enc.binaries),
        constraints=len(enc.constraints),
        output=None if output is None else str(output),
        script=script if output is None else None,
    )
    return Outcome(report, ExitCode.OK)


# --- PCP ---


def run_pcp_encode(run: RunConfig, _: argparse.Namespace) -> Outcome:
    p = _load_instance(run.input("instance"))
    return Outcome(sequent_to_document(reduction_sequent(p)), ExitCode.OK)


def run_pcp_solve(run: RunConfig, _: argparse.Namespace) -> Outcome:
    doc = ModelFile(PcpInstanceDocument, run.input("instance"), logger).load()
    result = brute_force_solve(instance_from_document(doc), run.max_pcp_length)
    solution = None if isinstance(result, NotFoundWithinBound) else list(result)
    report = PcpSolveReport(instance=doc, max_len=run.max_pcp_length, solution=solution)
    return Outcome(report, _found(solution is not None))


def run_pcp_countermodel(run: RunConfig, args: argparse.Namespace) -> Outcome:
    p = _load_instance(run.input("instance"))
    model, root = build_countermodel(p, args.solution, parse_algebra(_algebra(run)))
    s = reduction_sequent(p)
    countermodel = certify_countermodel(model, root, s)

    output = run.inputs.get("output")
    if output is not None:
        ModelFile(ModelDocument, output, logger).save(model_to_document(model))
    return Outcome(verdict_report(countermodel, s), ExitCode.FOUND)


def run_pcp_verify(run: RunConfig, args: argparse.Namespace) -> Outcome:
    p = _load_instance(run.input("instance"))
    model = _load_model(run.input("model"))
    check = check_reduction_model(model, p)
    characterization = verify_characterization(model, p, args.solution)

    alg = model.algebra
    report = PcpVerifyReport(
        root=ROOT,
        gamma_values=[alg.format_element(value) for value in check.gamma_at_root],
        phi_value=alg.format_element(check.box_phi_at_root),
        characterization=characterization,
        verified=check.verified,
    )
    return Outcome(report, _found(not (check.verified and characterization)))


# --- Experiments ---


def run_omega_chain(_: RunConfig, args: argparse.Namespace) -> Outcome:
    report = omega_chain_check(parse_fraction(args.alpha), args.depth)
    return Outcome(omega_chain_document(report), _found(not report.valid))


def run_separating_search(run: RunConfig, args: argparse.Namespace) -> Outcome:
    verdict = mvn_separating_search(args.n, run.max_worlds, run.node_budget)
    if isinstance(verdict, Countermodel):
        logger.error("Finite transitive countermodel to the separating sequent found")
    return Outcome(verdict_report(verdict, separating_sequent()), _found(isinstance(verdict, Countermodel)))


def run_delta_checks(run: RunConfig, args: argparse.Namespace) -> Outcome:
    gamma, phi = parse(args.gamma), parse(args.phi)
    checks = [
        delta_deduction_check(gamma, phi, args.n, run.max_worlds),
        bridge_duality_check(phi, args.n, run.max_worlds),
    ]
    holds = all(check.holds for check in checks)
    report = DeltaSuiteReport(checks=[delta_check_report(check) for check in checks], holds=holds)
    return Outcome(report, _found(not holds))


def run_sat(run: RunConfig, _: argparse.Namespace) -> Outcome:
    phi = parse(_read_text(run.input("formula")).strip())
    alg = parse_algebra(_algebra(run))
    witness = local_sat_search(
        phi,
        alg,
        run.max_worlds,
        transitive_only=run.transitive_only,
        node_budget=run.node_budget,
    )
    report = sat_report(phi, alg, run.max_worlds, witness, transitive_only=run.transitive_only)
    return Outcome(report, _found(witness is not None))


HANDLERS: dict[tuple[str, ...], Handler] = {
    ("eval",): run_eval,
    ("decide",): run_decide,
    ("prop-decide",): run_prop_decide,
    ("search",): run_search,
    ("emit-smt",): run_emit_smt,
    ("pcp", "encode"): run_pcp_encode,
    ("pcp", "solve"): run_pcp_solve,
    ("pcp", "countermodel"): run_pcp_countermodel,
    ("pcp", "verify"): run_pcp_verify,
    ("experiments", "omega-chain"): run_omega_chain,
    ("experiments", "separating-search"): run_separating_search,
    ("experiments", "delta-dt"): run_delta_checks,
    ("experiments", "sat"): run_sat,
}
