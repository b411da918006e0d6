from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from utils.rationals import format_fraction

if TYPE_CHECKING:
    from fractions import Fraction


@dataclass(frozen=True, slots=True)
class RationalValue:
    """Element of a chain whose carrier is the rationals of [0, 1]."""

    value: Fraction

    def __str__(self) -> str:
        return format_fraction(self.value)


@dataclass(frozen=True, slots=True)
class Index:
    """Element k/n of MV_n, stored by its numerator."""

    k: int

    def __str__(self) -> str:
        return f"#{self.k}"


@dataclass(frozen=True, slots=True)
class GenPower:
    """Element a^exponent of a one-generated product chain. `None` is the bottom element 0."""

    exponent: int | None

    @property
    def is_bottom(self) -> bool:
        return self.exponent is None

    def __str__(self) -> str:
        if self.exponent is None:
            return "0"
        if self.exponent == 0:
            return "1"
        return f"a^{self.exponent}"


type AlgebraElement = RationalValue | Index | GenPower
