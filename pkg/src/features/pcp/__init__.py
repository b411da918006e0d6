from .countermodel import (
    ROOT,
    ReductionCheck,
    build_countermodel,
    chain_world,
    check_reduction_model,
    verify_characterization,
)
from .encoding import encode_gamma, encode_phi, reduction_sequent
from .exceptions import (
    AlgebraTooContractiveError,
    CountermodelVerificationError,
    InvalidInstanceError,
    InvalidSequenceError,
    NotASolutionError,
    PcpError,
    PrefixSolutionError,
)
from .instance import (
    IndexSequence,
    NotFoundWithinBound,
    PcpInstance,
    brute_force_solve,
    concat,
    digits,
    instance_from_document,
    instance_to_document,
    is_solution,
    prefix_folds,
)

__all__ = [
    "ROOT",
    "AlgebraTooContractiveError",
    "CountermodelVerificationError",
    "IndexSequence",
    "InvalidInstanceError",
    "InvalidSequenceError",
    "NotASolutionError",
    "NotFoundWithinBound",
    "PcpError",
    "PcpInstance",
    "PrefixSolutionError",
    "ReductionCheck",
    "brute_force_solve",
    "build_countermodel",
    "chain_world",
    "check_reduction_model",
    "concat",
    "digits",
    "encode_gamma",
    "encode_phi",
    "instance_from_document",
    "instance_to_document",
    "is_solution",
    "prefix_folds",
    "reduction_sequent",
    "verify_characterization",
]
