from .delta import (
    BRIDGE_CHECK,
    DEDUCTION_CHECK,
    DeltaCheckResult,
    SatWitness,
    bridge_duality_check,
    deduction_exponent,
    delta_deduction_check,
    delta_deduction_transform,
    local_sat_search,
    sat_validity_bridge,
)
from .documents import delta_check_report, omega_chain_document, sat_report
from .exceptions import DomainError, ExperimentError
from .separating import (
    OmegaChainRecord,
    OmegaChainReport,
    mvn_separating_search,
    omega_chain_check,
    omega_chain_closed_form,
    omega_chain_model,
    separating_sequent,
)

__all__ = [
    "BRIDGE_CHECK",
    "DEDUCTION_CHECK",
    "DeltaCheckResult",
    "DomainError",
    "ExperimentError",
    "OmegaChainRecord",
    "OmegaChainReport",
    "SatWitness",
    "bridge_duality_check",
    "deduction_exponent",
    "delta_check_report",
    "delta_deduction_check",
    "delta_deduction_transform",
    "local_sat_search",
    "mvn_separating_search",
    "omega_chain_check",
    "omega_chain_closed_form",
    "omega_chain_document",
    "omega_chain_model",
    "sat_report",
    "sat_validity_bridge",
    "separating_sequent",
]
