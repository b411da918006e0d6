from pydantic import BaseModel, Field

from . import enums

# Exact values travel as strings: "p/q", "p", or "a^i" for one-generated product chains.


class ModelDocument(BaseModel, frozen=True):
    algebra: str
    worlds: list[str] = Field(min_length=1)
    relation: list[tuple[str, str]] = []
    valuation: dict[str, dict[str, str]] = {}


class PcpInstanceDocument(BaseModel, frozen=True):
    base: int = Field(ge=2)
    pairs: list[tuple[int, int]] = Field(min_length=1)


class SequentDocument(BaseModel, frozen=True):
    premises: list[str] = []
    conclusion: str


class CountermodelCertificate(BaseModel, frozen=True):
    model: ModelDocument
    world: str
    premise_values: list[str]
    conclusion_value: str


class CountervaluationCertificate(BaseModel, frozen=True):
    valuation: dict[str, str]
    gap: str


class VerdictReport(BaseModel, frozen=True):
    verdict: enums.VerdictKind
    bound: str | None = None
    countermodel: CountermodelCertificate | None = None
    countervaluation: CountervaluationCertificate | None = None


class EvalReport(BaseModel, frozen=True):
    world: str
    formula: str
    value: str


class PcpSolveReport(BaseModel, frozen=True):
    instance: PcpInstanceDocument
    max_len: int
    solution: list[int] | None


class PcpVerifyReport(BaseModel, frozen=True):
    root: str
    gamma_values: list[str]
    phi_value: str
    characterization: bool
    verified: bool


class OmegaChainEntry(BaseModel, frozen=True):
    world: int
    x: str
    box_x_squared: str
    increasing: bool
    below_one: bool
    fixpoint: bool
    no_dead_end: bool
    closed_form: bool


class OmegaChainDocument(BaseModel, frozen=True):
    alpha: str
    depth: int
    records: list[OmegaChainEntry]
    premise_values: list[str]
    conclusion_value: str
    valid: bool


class SatReport(BaseModel, frozen=True):
    formula: str
    algebra: str
    max_worlds: int
    transitive_only: bool
    model: ModelDocument | None = None
    world: str | None = None


class DeltaCheckReport(BaseModel, frozen=True):
    check: str
    algebra: str
    max_worlds: int
    models_checked: int
    worlds_checked: int
    holds: bool
    counterexample: ModelDocument | None = None
    world: str | None = None


class DeltaSuiteReport(BaseModel, frozen=True):
    checks: list[DeltaCheckReport]
    holds: bool


class SmtReport(BaseModel, frozen=True):
    variables: int
    binaries: int
    constraints: int
    output: str | None = None
    script: str | None = None
