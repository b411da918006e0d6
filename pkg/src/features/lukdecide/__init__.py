from .branch_and_bound import Countervaluation, PropVerdict, Valid, solve_milp
from .config import EngineConfig
from .decide import (
    check_reconstruction,
    decide,
    evaluate_prop,
    finite_chain_countermodel,
    prop_decide,
    reconstruct_model,
)
from .exceptions import (
    CountervaluationError,
    DeltaNotSupportedError,
    InfeasibleError,
    LukDecideError,
    ModalFormulaError,
    ResourceBudgetExceededError,
    SmtFormatError,
    UnboundedError,
)
from .milp import LinearExpr, MilpEncoding, MilpVariable, VariableKind, complete_binaries, encode_milp
from .simplex import LinearConstraint, LinearProgram, LpSolution, Sense, maximize
from .smtlib import check_smt_well_formed, emit_smt
from .unfolding import ROOT, PropSequent, WitnessTree, unfold, variable_name

__all__ = [
    "ROOT",
    "Countervaluation",
    "CountervaluationError",
    "DeltaNotSupportedError",
    "EngineConfig",
    "InfeasibleError",
    "LinearConstraint",
    "LinearExpr",
    "LinearProgram",
    "LpSolution",
    "LukDecideError",
    "MilpEncoding",
    "MilpVariable",
    "ModalFormulaError",
    "PropSequent",
    "PropVerdict",
    "ResourceBudgetExceededError",
    "Sense",
    "SmtFormatError",
    "UnboundedError",
    "Valid",
    "VariableKind",
    "WitnessTree",
    "check_reconstruction",
    "check_smt_well_formed",
    "complete_binaries",
    "decide",
    "emit_smt",
    "encode_milp",
    "evaluate_prop",
    "finite_chain_countermodel",
    "maximize",
    "prop_decide",
    "reconstruct_model",
    "solve_milp",
    "unfold",
    "variable_name",
]
