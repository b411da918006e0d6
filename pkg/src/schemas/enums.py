from enum import IntEnum, StrEnum


class AlgebraKind(StrEnum):
    MVN = "mv"
    LUK_RATIONAL = "luk"
    GODEL_RATIONAL = "godel"
    PRODUCT_RATIONAL = "product"
    PRODUCT_ONE_GEN = "product1"


class BinOp(StrEnum):
    MEET = "meet"
    JOIN = "join"
    FUSE = "fuse"
    IMPL = "impl"


class OutputFormat(StrEnum):
    HUMAN = "human"
    JSON = "json"


class Logic(StrEnum):
    KLUK = "kluk"


class VerdictKind(StrEnum):
    HOLDS = "Holds"
    COUNTERMODEL = "Countermodel"
    NO_COUNTEREXAMPLE_FOUND = "NoCounterexampleFound"
    VALID = "Valid"
    COUNTERVALUATION = "Countervaluation"


class LocalCheck(StrEnum):
    PREMISES_NOT_SATISFIED = "PremisesNotSatisfied"
    CONCLUSION_HOLDS = "ConclusionHolds"
    CONCLUSION_FAILS = "ConclusionFails"


class ExitCode(IntEnum):
    OK = 0
    FOUND = 1
    USAGE = 2
    BUDGET = 3
