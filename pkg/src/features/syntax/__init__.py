from .exceptions import FormulaParseError, SyntaxModuleError
from .formula import (
    ONE,
    ZERO,
    Binary,
    Box,
    Const0,
    Const1,
    Delta,
    Diamond,
    Formula,
    Fuse,
    Impl,
    Join,
    Meet,
    Modal,
    Power,
    Sequent,
    Var,
    children,
    iff,
    neg,
)
from .measures import (
    contains_delta,
    contains_modality,
    iter_subformulas,
    modal_depth,
    modal_depth_profile,
    normalize_to_diamond,
    psfm,
    subformulas,
    variables,
)
from .parser import parse
from .printer import to_text

__all__ = [
    "ONE",
    "ZERO",
    "Binary",
    "Box",
    "Const0",
    "Const1",
    "Delta",
    "Diamond",
    "Formula",
    "FormulaParseError",
    "Fuse",
    "Impl",
    "Join",
    "Meet",
    "Modal",
    "Power",
    "Sequent",
    "SyntaxModuleError",
    "Var",
    "children",
    "contains_delta",
    "contains_modality",
    "iff",
    "iter_subformulas",
    "modal_depth",
    "modal_depth_profile",
    "neg",
    "normalize_to_diamond",
    "parse",
    "psfm",
    "subformulas",
    "to_text",
    "variables",
]
