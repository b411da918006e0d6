from __future__ import annotations

import argparse
from pathlib import Path

from schemas.enums import Logic

from .config import DEFAULT_DELTA_ALGEBRA


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        msg = f"expected a positive integer, got {text}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        msg = f"expected a positive number, got {text}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _index_sequence(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as e:
        msg = f"expected comma separated indices, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from e


def _add_bounds(parser: argparse.ArgumentParser, *, algebra: str | None) -> None:
    parser.add_argument(
        "--algebra",
        default=algebra,
        help="chain descriptor: mv:<n>, luk, godel, product, product1:<p>/<q>",
    )
    parser.add_argument("--worlds", type=_positive, dest="max_worlds", help="largest model size to enumerate")
    parser.add_argument("--transitive", action="store_true", dest="transitive_only", help="transitive frames only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="workbench", description="Many-valued modal logic workbench")
    parser.add_argument("--json", action="store_true", help="machine readable output on stdout")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--config", type=Path, help="JSON file with default bounds")
    parser.add_argument("--node-budget", type=_positive, help="branch-and-bound nodes or enumerated models")
    parser.add_argument("--time-budget", type=_positive_float, help="seconds for branch-and-bound")
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="value of a formula at a world of a model file")
    evaluate.add_argument("--model", type=Path, required=True)
    evaluate.add_argument("--world", required=True)
    evaluate.add_argument("--formula", required=True)

    decide = commands.add_parser("decide", help="decide a modal Łukasiewicz sequent")
    decide.add_argument("--logic", type=Logic, choices=list(Logic), default=Logic.KLUK)
    decide.add_argument("--sequent", type=Path, required=True)
    decide.add_argument("--emit-smt", type=Path, dest="emit_smt", help="also write the SMT-LIB 2 encoding")
    _add_bounds(decide, algebra=DEFAULT_DELTA_ALGEBRA)

    prop = commands.add_parser("prop-decide", help="decide a propositional Łukasiewicz sequent")
    prop.add_argument("--sequent", type=Path, required=True)

    search = commands.add_parser("search", help="bounded countermodel search over a finite chain")
    search.add_argument("--sequent", type=Path, required=True)
    _add_bounds(search, algebra=DEFAULT_DELTA_ALGEBRA)

    smt = commands.add_parser("emit-smt", help="SMT-LIB 2 encoding of an unfolded sequent")
    smt.add_argument("--sequent", type=Path, required=True)
    smt.add_argument("--output", type=Path)

    _build_pcp(commands.add_parser("pcp", help="PCP reduction tools"))
    _build_experiments(commands.add_parser("experiments", help="separating sequent and Δ checks"))
    return parser


def _build_pcp(parser: argparse.ArgumentParser) -> None:
    actions = parser.add_subparsers(dest="action", required=True)

    encode = actions.add_parser("encode", help="reduction sequent of an instance")
    encode.add_argument("--instance", type=Path, required=True)

    solve = actions.add_parser("solve", help="bounded brute-force solution search")
    solve.add_argument("--instance", type=Path, required=True)
    solve.add_argument("--max-len", type=_positive, dest="max_pcp_length")

    countermodel = actions.add_parser("countermodel", help="certified countermodel from a solution")
    countermodel.add_argument("--instance", type=Path, required=True)
    countermodel.add_argument("--solution", type=_index_sequence, required=True)
    countermodel.add_argument("--algebra", default="luk")
    countermodel.add_argument("--output", type=Path)

    verify = actions.add_parser("verify", help="re-check a countermodel file")
    verify.add_argument("--instance", type=Path, required=True)
    verify.add_argument("--model", type=Path, required=True)
    verify.add_argument("--solution", type=_index_sequence, required=True)


def _build_experiments(parser: argparse.ArgumentParser) -> None:
    actions = parser.add_subparsers(dest="action", required=True)

    omega = actions.add_parser("omega-chain", help="symbolic check of the ω-chain model")
    omega.add_argument("--alpha", default="1/10")
    omega.add_argument("--depth", type=_positive, default=50)

    separating = actions.add_parser("separating-search", help="finite transitive search on the separating sequent")
    separating.add_argument("--n", type=_positive, default=4)
    separating.add_argument("--worlds", type=_positive, dest="max_worlds")

    delta = actions.add_parser("delta-dt", help="Δ deduction theorem and SAT/validity bridge checks")
    delta.add_argument("--gamma", default="x")
    delta.add_argument("--phi", default="[]x")
    delta.add_argument("--n", type=_positive, default=3)
    delta.add_argument("--worlds", type=_positive, dest="max_worlds", default=2)

    sat = actions.add_parser("sat", help="bounded local SAT search")
    sat.add_argument("--formula", type=Path, required=True, help="file holding one formula")
    _add_bounds(sat, algebra=DEFAULT_DELTA_ALGEBRA)
