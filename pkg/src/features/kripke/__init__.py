from .documents import countermodel_certificate, model_from_document, model_to_document
from .evaluator import LocalCheckResult, check_local_consequence_at, evaluate, holds_at
from .exceptions import (
    BudgetExceededError,
    CertificateError,
    InvalidModelError,
    KripkeError,
    UnknownWorldError,
    UnsupportedAlgebraError,
)
from .frames import (
    depth,
    generated_submodel,
    is_chain_frame,
    is_transitive,
    is_witnessed,
    reachable,
    transitive_closure,
    witness,
)
from .model import KripkeModel
from .search import ROOT, SearchBounds, enumerate_models, rooted_relations, search_countermodel, world_names
from .verdict import Countermodel, Holds, NoCounterexampleFound, Verdict, certify_countermodel

__all__ = [
    "ROOT",
    "BudgetExceededError",
    "CertificateError",
    "Countermodel",
    "Holds",
    "InvalidModelError",
    "KripkeError",
    "KripkeModel",
    "LocalCheckResult",
    "NoCounterexampleFound",
    "SearchBounds",
    "UnknownWorldError",
    "UnsupportedAlgebraError",
    "Verdict",
    "certify_countermodel",
    "check_local_consequence_at",
    "countermodel_certificate",
    "depth",
    "enumerate_models",
    "evaluate",
    "generated_submodel",
    "holds_at",
    "is_chain_frame",
    "is_transitive",
    "is_witnessed",
    "model_from_document",
    "model_to_document",
    "reachable",
    "rooted_relations",
    "search_countermodel",
    "transitive_closure",
    "witness",
    "world_names",
]
