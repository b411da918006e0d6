from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

from pydantic import ValidationError

from features.algebra import AlgebraError
from features.experiments import ExperimentError
from features.kripke import BudgetExceededError, InvalidModelError, UnknownWorldError
from features.kripke import UnsupportedAlgebraError as KripkeAlgebraError
from features.lukdecide import DeltaNotSupportedError, ModalFormulaError, ResourceBudgetExceededError
from features.pcp import (
    AlgebraTooContractiveError,
    InvalidInstanceError,
    InvalidSequenceError,
    NotASolutionError,
    PrefixSolutionError,
)
from features.syntax import SyntaxModuleError
from schemas.enums import ExitCode, OutputFormat
from utils.model_file import ModelFile, ModelFileError
from utils.rationals import RationalFormatError

from .commands import HANDLERS
from .config import RunConfig, WorkbenchConfig
from .parser import build_parser
from .render import Renderer

if TYPE_CHECKING:
    import argparse
    from collections.abc import Sequence

logger = logging.getLogger("Workbench")

USAGE_ERRORS = (
    AlgebraError,
    AlgebraTooContractiveError,
    DeltaNotSupportedError,
    ExperimentError,
    InvalidInstanceError,
    InvalidModelError,
    InvalidSequenceError,
    KripkeAlgebraError,
    ModalFormulaError,
    ModelFileError,
    NotASolutionError,
    PrefixSolutionError,
    RationalFormatError,
    SyntaxModuleError,
    UnknownWorldError,
    ValidationError,
)
BUDGET_ERRORS = (BudgetExceededError, ResourceBudgetExceededError)

_INPUTS = ("model", "sequent", "instance", "formula", "output", "emit_smt")


def _load_config(path: Path | None) -> WorkbenchConfig:
    if path is None:
        return WorkbenchConfig()
    return ModelFile(WorkbenchConfig, path, logger).load_or_none() or WorkbenchConfig()


def run_config(args: argparse.Namespace, defaults: WorkbenchConfig) -> RunConfig:
    """Merge parsed flags over the config file defaults."""

    def flag[T](name: str, default: T) -> T:
        value = getattr(args, name, None)
        return default if value is None else value

    command = tuple(part for part in (args.command, getattr(args, "action", None)) if part is not None)
    inputs = {name: value for name in _INPUTS if isinstance(value := getattr(args, name, None), Path)}
    return RunConfig(
        command=command,
        inputs=inputs,
        algebra=getattr(args, "algebra", None),
        max_worlds=flag("max_worlds", defaults.max_worlds),
        max_pcp_length=flag("max_pcp_length", defaults.max_pcp_length),
        node_budget=flag("node_budget", defaults.node_budget),
        time_budget_seconds=flag("time_budget", defaults.time_budget_seconds),
        transitive_only=flag("transitive_only", False),  # noqa: FBT003
        output=OutputFormat.JSON if args.json else defaults.output,
    )


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ExitCode.USAGE

    logger.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        run = run_config(args, _load_config(args.config))
        logger.debug("Running %s with %s", " ".join(run.command), run)
        outcome = HANDLERS[run.command](run, args)
    except USAGE_ERRORS as e:
        logger.error("%s", e)  # noqa: TRY400
        return ExitCode.USAGE
    except BUDGET_ERRORS as e:
        logger.warning("Resource budget exhausted: %s", e)
        return ExitCode.BUDGET

    Renderer(run.output).show(outcome.report)
    return outcome.code
