from .chains import (
    ChainAlgebra,
    GodelRational,
    LukRational,
    MVn,
    ProductOneGen,
    ProductRational,
    apply_binop,
    delta,
    parse_algebra,
    power,
)
from .elements import AlgebraElement, GenPower, Index, RationalValue
from .exceptions import (
    AlgebraDescriptorError,
    AlgebraError,
    CarrierMismatchError,
    ElementParseError,
    NoSuchElementError,
    UnsupportedAlgebraError,
)
from .predicates import is_n_contractive, is_weakly_archimedean, pick_noncontractive_element

__all__ = [
    "AlgebraDescriptorError",
    "AlgebraElement",
    "AlgebraError",
    "CarrierMismatchError",
    "ChainAlgebra",
    "ElementParseError",
    "GenPower",
    "GodelRational",
    "Index",
    "LukRational",
    "MVn",
    "NoSuchElementError",
    "ProductOneGen",
    "ProductRational",
    "RationalValue",
    "UnsupportedAlgebraError",
    "apply_binop",
    "delta",
    "is_n_contractive",
    "is_weakly_archimedean",
    "parse_algebra",
    "pick_noncontractive_element",
    "power",
]
