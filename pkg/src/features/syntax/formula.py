from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

from schemas.enums import BinOp


@dataclass(frozen=True, slots=True)
class Const0:
    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True, slots=True)
class Const1:
    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Binary:
    left: Formula
    right: Formula

    op: ClassVar[BinOp]


@dataclass(frozen=True, slots=True)
class Meet(Binary):
    op: ClassVar[BinOp] = BinOp.MEET


@dataclass(frozen=True, slots=True)
class Join(Binary):
    op: ClassVar[BinOp] = BinOp.JOIN


@dataclass(frozen=True, slots=True)
class Fuse(Binary):
    op: ClassVar[BinOp] = BinOp.FUSE


@dataclass(frozen=True, slots=True)
class Impl(Binary):
    op: ClassVar[BinOp] = BinOp.IMPL


@dataclass(frozen=True, slots=True)
class Box:
    body: Formula


@dataclass(frozen=True, slots=True)
class Diamond:
    body: Formula


@dataclass(frozen=True, slots=True)
class Delta:
    body: Formula


@dataclass(frozen=True, slots=True)
class Power:
    body: Formula
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            msg = f"Power exponent must be >= 0, got {self.exponent}"
            raise ValueError(msg)


type Modal = Box | Diamond
type Formula = Const0 | Const1 | Var | Meet | Join | Fuse | Impl | Box | Diamond | Delta | Power

ZERO = Const0()
ONE = Const1()


def neg(f: Formula) -> Impl:
    return Impl(f, ZERO)


def iff(left: Formula, right: Formula) -> Fuse:
    return Fuse(Impl(left, right), Impl(right, left))


def children(f: Formula) -> tuple[Formula, ...]:
    match f:
        case Binary(left=left, right=right):
            return (left, right)
        case Box(body=body) | Diamond(body=body) | Delta(body=body) | Power(body=body):
            return (body,)
        case _:
            return ()


@dataclass(frozen=True)
class Sequent:
    """Premises Γ and conclusion φ of a local consequence Γ ⊢ φ.

    Premises keep their first-occurrence order; duplicates are dropped.
    """

    premises: tuple[Formula, ...]
    conclusion: Formula

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", tuple(dict.fromkeys(self.premises)))

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return (*self.premises, self.conclusion)
