from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, override

from schemas.enums import AlgebraKind, BinOp
from utils.rationals import RationalFormatError, format_fraction, parse_fraction

from .elements import AlgebraElement, GenPower, Index, RationalValue
from .exceptions import AlgebraDescriptorError, CarrierMismatchError, ElementParseError, UnsupportedAlgebraError

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ChainAlgebra(ABC):
    """Linearly ordered FL_ew algebra with exact arithmetic.

    meet and join are min and max on the chain order; every other operation is
    supplied by the concrete chain.
    """

    kind: ClassVar[AlgebraKind]

    @property
    @abstractmethod
    def top(self) -> AlgebraElement: ...

    @property
    @abstractmethod
    def bottom(self) -> AlgebraElement: ...

    @property
    def is_finite(self) -> bool:
        return False

    @abstractmethod
    def check(self, a: AlgebraElement) -> AlgebraElement:
        """Return `a` unchanged, or raise CarrierMismatchError when it is not in the carrier."""

    @abstractmethod
    def leq(self, a: AlgebraElement, b: AlgebraElement) -> bool: ...

    @abstractmethod
    def fuse(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement: ...

    @abstractmethod
    def impl(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement: ...

    @abstractmethod
    def power(self, a: AlgebraElement, m: int) -> AlgebraElement:
        """m-fold fusion of `a` in closed form; a^0 is the top element."""

    @abstractmethod
    def parse_element(self, text: str) -> AlgebraElement: ...

    @abstractmethod
    def format_element(self, a: AlgebraElement) -> str: ...

    @abstractmethod
    def to_rational(self, a: AlgebraElement) -> Fraction: ...

    @abstractmethod
    def describe(self) -> str: ...

    def carrier(self) -> tuple[AlgebraElement, ...]:
        msg = f"{self.describe()} has an infinite carrier"
        raise UnsupportedAlgebraError(msg)

    def lt(self, a: AlgebraElement, b: AlgebraElement) -> bool:
        return a != b and self.leq(a, b)

    def meet(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        return a if self.leq(a, b) else b

    def join(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        return b if self.leq(a, b) else a

    def neg(self, a: AlgebraElement) -> AlgebraElement:
        return self.impl(a, self.bottom)

    def iff(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        return self.fuse(self.impl(a, b), self.impl(b, a))

    def delta(self, a: AlgebraElement) -> AlgebraElement:
        return self.top if self.check(a) == self.top else self.bottom

    def apply(self, op: BinOp, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        match op:
            case BinOp.MEET:
                return self.meet(a, b)
            case BinOp.JOIN:
                return self.join(a, b)
            case BinOp.FUSE:
                return self.fuse(a, b)
            case BinOp.IMPL:
                return self.impl(a, b)

    def _mismatch(self, a: object) -> CarrierMismatchError:
        return CarrierMismatchError(f"{a!r} is not an element of {self.describe()}")

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class MVn(ChainAlgebra):
    n: int

    kind: ClassVar[AlgebraKind] = AlgebraKind.MVN

    def __post_init__(self) -> None:
        if self.n < 1:
            msg = f"MV_n needs n >= 1, got {self.n}"
            raise AlgebraDescriptorError(msg)

    @property
    @override
    def top(self) -> Index:
        return Index(self.n)

    @property
    @override
    def bottom(self) -> Index:
        return Index(0)

    @property
    @override
    def is_finite(self) -> bool:
        return True

    @override
    def check(self, a: AlgebraElement) -> Index:
        if isinstance(a, Index) and 0 <= a.k <= self.n:
            return a
        raise self._mismatch(a)

    @override
    def leq(self, a: AlgebraElement, b: AlgebraElement) -> bool:
        return self.check(a).k <= self.check(b).k

    @override
    def fuse(self, a: AlgebraElement, b: AlgebraElement) -> Index:
        return Index(max(0, self.check(a).k + self.check(b).k - self.n))

    @override
    def impl(self, a: AlgebraElement, b: AlgebraElement) -> Index:
        return Index(min(self.n, self.n - self.check(a).k + self.check(b).k))

    @override
    def power(self, a: AlgebraElement, m: int) -> Index:
        k = self.check(a).k
        if m == 0:
            return self.top
        return Index(max(0, self.n - m * (self.n - k)))

    @override
    def carrier(self) -> tuple[Index, ...]:
        return tuple(Index(k) for k in range(self.n + 1))

    @override
    def parse_element(self, text: str) -> Index:
        value = _parse_unit_interval(text)
        scaled = value * self.n
        if scaled.denominator != 1:
            msg = f"{text!r} is not a multiple of 1/{self.n}"
            raise ElementParseError(msg)
        return Index(scaled.numerator)

    @override
    def format_element(self, a: AlgebraElement) -> str:
        return format_fraction(self.to_rational(a))

    @override
    def to_rational(self, a: AlgebraElement) -> Fraction:
        return Fraction(self.check(a).k, self.n)

    @override
    def describe(self) -> str:
        return f"mv:{self.n}"


class _RationalChain(ChainAlgebra):
    @property
    @override
    def top(self) -> RationalValue:
        return RationalValue(_ONE)

    @property
    @override
    def bottom(self) -> RationalValue:
        return RationalValue(_ZERO)

    @override
    def check(self, a: AlgebraElement) -> RationalValue:
        if isinstance(a, RationalValue) and _ZERO <= a.value <= _ONE:
            return a
        raise self._mismatch(a)

    @override
    def leq(self, a: AlgebraElement, b: AlgebraElement) -> bool:
        return self.check(a).value <= self.check(b).value

    @override
    def parse_element(self, text: str) -> RationalValue:
        return RationalValue(_parse_unit_interval(text))

    @override
    def format_element(self, a: AlgebraElement) -> str:
        return format_fraction(self.check(a).value)

    @override
    def to_rational(self, a: AlgebraElement) -> Fraction:
        return self.check(a).value


@dataclass(frozen=True)
class LukRational(_RationalChain):
    kind: ClassVar[AlgebraKind] = AlgebraKind.LUK_RATIONAL

    @override
    def fuse(self, a: AlgebraElement, b: AlgebraElement) -> RationalValue:
        return RationalValue(max(_ZERO, self.check(a).value + self.check(b).value - 1))

    @override
    def impl(self, a: AlgebraElement, b: AlgebraElement) -> RationalValue:
        return RationalValue(min(_ONE, 1 - self.check(a).value + self.check(b).value))

    @override
    def power(self, a: AlgebraElement, m: int) -> RationalValue:
        value = self.check(a).value
        if m == 0:
            return self.top
        return RationalValue(max(_ZERO, 1 - m * (1 - value)))

    @override
    def describe(self) -> str:
        return "luk"


@dataclass(frozen=True)
class GodelRational(_RationalChain):
    kind: ClassVar[AlgebraKind] = AlgebraKind.GODEL_RATIONAL

    @override
    def fuse(self, a: AlgebraElement, b: AlgebraElement) -> RationalValue:
        return RationalValue(min(self.check(a).value, self.check(b).value))

    @override
    def impl(self, a: AlgebraElement, b: AlgebraElement) -> RationalValue:
        left, right = self.check(a).value, self.check(b).value
        return self.top if left <= right else RationalValue(right)

    @override
    def power(self, a: AlgebraElement, m: int) -> RationalValue:
        checked = self.check(a)
        return self.top if m == 0 else checked

    @override
    def describe(self) -> str:
        return "godel"


@dataclass(frozen=True)
class ProductRational(_RationalChain):
    kind: ClassVar[AlgebraKind] = AlgebraKind.PRODUCT_RATIONAL

    @override
    def fuse(self, a: AlgebraElement, b: AlgebraElement) -> RationalValue:
        return RationalValue(self.check(a).value * self.check(b).value)

    @override
    def impl(self, a: AlgebraElement, b: AlgebraElement) -> RationalValue:
        left, right = self.check(a).value, self.check(b).value
        return self.top if left <= right else RationalValue(right / left)

    @override
    def power(self, a: AlgebraElement, m: int) -> RationalValue:
        value = self.check(a).value
        if m == 0:
            return self.top
        # int ** int squares, so huge m only costs the size of the result.
        return RationalValue(Fraction(value.numerator**m, value.denominator**m))

    @override
    def describe(self) -> str:
        return "product"


@dataclass(frozen=True)
class ProductOneGen(ChainAlgebra):
    """Subalgebra {0, 1} ∪ {a^i} of the standard product algebra, elements kept by exponent."""

    generator: Fraction

    kind: ClassVar[AlgebraKind] = AlgebraKind.PRODUCT_ONE_GEN

    def __post_init__(self) -> None:
        if not _ZERO < self.generator < _ONE:
            msg = f"Generator must lie strictly between 0 and 1, got {self.generator}"
            raise AlgebraDescriptorError(msg)

    @property
    @override
    def top(self) -> GenPower:
        return GenPower(0)

    @property
    @override
    def bottom(self) -> GenPower:
        return GenPower(None)

    @override
    def check(self, a: AlgebraElement) -> GenPower:
        if isinstance(a, GenPower) and (a.exponent is None or a.exponent >= 0):
            return a
        raise self._mismatch(a)

    @override
    def leq(self, a: AlgebraElement, b: AlgebraElement) -> bool:
        i, j = self.check(a).exponent, self.check(b).exponent
        if i is None:
            return True
        if j is None:
            return False
        return i >= j

    @override
    def fuse(self, a: AlgebraElement, b: AlgebraElement) -> GenPower:
        i, j = self.check(a).exponent, self.check(b).exponent
        if i is None or j is None:
            return self.bottom
        return GenPower(i + j)

    @override
    def impl(self, a: AlgebraElement, b: AlgebraElement) -> GenPower:
        i, j = self.check(a).exponent, self.check(b).exponent
        if i is None:
            return self.top
        if j is None:
            return self.bottom
        return GenPower(max(0, j - i))

    @override
    def power(self, a: AlgebraElement, m: int) -> GenPower:
        i = self.check(a).exponent
        if m == 0:
            return self.top
        if i is None:
            return self.bottom
        return GenPower(i * m)

    @override
    def parse_element(self, text: str) -> GenPower:
        stripped = text.strip()
        if stripped.startswith("a^"):
            exponent = stripped[2:]
            if not exponent.isdigit():
                msg = f"Bad generator power: {text!r}"
                raise ElementParseError(msg)
            return GenPower(int(exponent))

        value = _parse_unit_interval(text)
        if value == _ZERO:
            return self.bottom

        exponent_found = 0
        current = _ONE
        while current > value:
            current *= self.generator
            exponent_found += 1
        if current != value:
            msg = f"{text!r} is not a power of {format_fraction(self.generator)}"
            raise ElementParseError(msg)
        return GenPower(exponent_found)

    @override
    def format_element(self, a: AlgebraElement) -> str:
        return str(self.check(a))

    @override
    def to_rational(self, a: AlgebraElement) -> Fraction:
        i = self.check(a).exponent
        if i is None:
            return _ZERO
        return self.generator**i

    @override
    def describe(self) -> str:
        return f"product1:{self.generator.numerator}/{self.generator.denominator}"


def _parse_unit_interval(text: str) -> Fraction:
    try:
        value = parse_fraction(text)
    except RationalFormatError as e:
        raise ElementParseError(str(e)) from e

    if not _ZERO <= value <= _ONE:
        msg = f"{text!r} lies outside [0, 1]"
        raise ElementParseError(msg)
    return value


def parse_algebra(descriptor: str) -> ChainAlgebra:
    """Parse `mv:<n>`, `luk`, `godel`, `product` or `product1:<p>/<q>`."""
    name, _, argument = descriptor.strip().partition(":")

    match name:
        case AlgebraKind.MVN:
            if not argument.isdigit():
                msg = f"Bad MV_n descriptor: {descriptor!r}"
                raise AlgebraDescriptorError(msg)
            return MVn(int(argument))
        case AlgebraKind.LUK_RATIONAL if not argument:
            return LukRational()
        case AlgebraKind.GODEL_RATIONAL if not argument:
            return GodelRational()
        case AlgebraKind.PRODUCT_RATIONAL if not argument:
            return ProductRational()
        case AlgebraKind.PRODUCT_ONE_GEN:
            try:
                generator = parse_fraction(argument)
            except RationalFormatError as e:
                raise AlgebraDescriptorError(str(e)) from e
            return ProductOneGen(generator)
        case _:
            msg = f"Unknown algebra descriptor: {descriptor!r}"
            raise AlgebraDescriptorError(msg)


def apply_binop(alg: ChainAlgebra, op: BinOp, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return alg.apply(op, a, b)


def delta(alg: ChainAlgebra, a: AlgebraElement) -> AlgebraElement:
    return alg.delta(a)


def power(alg: ChainAlgebra, a: AlgebraElement, m: int) -> AlgebraElement:
    if m < 0:
        msg = f"Negative exponent: {m}"
        raise ValueError(msg)
    return alg.power(a, m)
