from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

from features.syntax import Box, Const0, Const1, Delta, Diamond, Formula, Fuse, Impl, Join, Meet, Power, Var

from .exceptions import DeltaNotSupportedError, ModalFormulaError
from .simplex import LinearConstraint, LinearProgram, Sense
from .unfolding import PropSequent

logger = logging.getLogger("Workbench").getChild("LukDecide")

ONE = Fraction(1)


class VariableKind(StrEnum):
    CONTINUOUS = "continuous"
    BINARY = "binary"


@dataclass(frozen=True)
class MilpVariable:
    name: str
    kind: VariableKind


@dataclass(frozen=True)
class LinearExpr:
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)
    constant: Fraction = Fraction(0)

    @classmethod
    def column(cls, j: int) -> LinearExpr:
        return cls({j: ONE})

    @classmethod
    def const(cls, c: int | Fraction) -> LinearExpr:
        return cls({}, Fraction(c))

    def __add__(self, other: LinearExpr | int | Fraction) -> LinearExpr:
        if not isinstance(other, LinearExpr):
            return LinearExpr(self.coeffs, self.constant + other)
        coeffs = dict(self.coeffs)
        for j, a in other.coeffs.items():
            coeffs[j] = coeffs.get(j, Fraction(0)) + a
        return LinearExpr({j: a for j, a in coeffs.items() if a}, self.constant + other.constant)

    def __radd__(self, other: int | Fraction) -> LinearExpr:
        return self + other

    def __neg__(self) -> LinearExpr:
        return LinearExpr({j: -a for j, a in self.coeffs.items()}, -self.constant)

    def __sub__(self, other: LinearExpr | int | Fraction) -> LinearExpr:
        return self + (-other)

    def __rsub__(self, other: int | Fraction) -> LinearExpr:
        return -self + other

    def __rmul__(self, scalar: int | Fraction) -> LinearExpr:
        if not scalar:
            return LinearExpr()
        return LinearExpr({j: scalar * a for j, a in self.coeffs.items()}, scalar * self.constant)

    def value(self, point: Mapping[int, Fraction]) -> Fraction:
        return self.constant + sum((a * point[j] for j, a in self.coeffs.items()), Fraction(0))


def _compare(lhs: LinearExpr, sense: Sense, rhs: LinearExpr) -> LinearConstraint:
    diff = lhs - rhs
    return LinearConstraint(diff.coeffs, sense, -diff.constant)


@dataclass(frozen=True)
class MilpEncoding:
    """Mixed-integer program maximizing the gap 1 − conclusion over valuations that pin the premises to 1.

    Every variable ranges over [0, 1]; binaries additionally over {0, 1}.
    """

    variables: tuple[MilpVariable, ...]
    constraints: tuple[LinearConstraint, ...]
    inputs: Mapping[str, int]
    nodes: Mapping[Formula, LinearExpr]
    conclusion: LinearExpr

    @property
    def objective(self) -> LinearExpr:
        return 1 - self.conclusion

    @property
    def binaries(self) -> tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.variables) if v.kind == VariableKind.BINARY)

    def relaxation(self, fixed: Mapping[int, int] | None = None) -> LinearProgram:
        fixings = [LinearConstraint({j: ONE}, Sense.EQ, Fraction(v)) for j, v in sorted((fixed or {}).items())]
        return LinearProgram(
            len(self.variables),
            self.objective.coeffs,
            (*self.constraints, *fixings),
            (ONE,) * len(self.variables),
            self.objective.constant,
        )


class _Encoder:
    def __init__(self) -> None:
        self.variables: list[MilpVariable] = []
        self.constraints: list[LinearConstraint] = []
        self.inputs: dict[str, int] = {}
        self.nodes: dict[Formula, LinearExpr] = {}

    def new(self, name: str, kind: VariableKind) -> LinearExpr:
        self.variables.append(MilpVariable(name, kind))
        return LinearExpr.column(len(self.variables) - 1)

    def node(self) -> tuple[LinearExpr, LinearExpr]:
        k = len(self.variables)
        return self.new(f"_n{k}", VariableKind.CONTINUOUS), self.new(f"_d{k + 1}", VariableKind.BINARY)

    def add(self, lhs: LinearExpr, sense: Sense, rhs: LinearExpr | int | Fraction) -> None:
        right = rhs if isinstance(rhs, LinearExpr) else LinearExpr.const(rhs)
        self.constraints.append(_compare(lhs, sense, right))

    def value(self, f: Formula) -> LinearExpr:
        if f not in self.nodes:
            self.nodes[f] = self._encode(f)
        return self.nodes[f]

    def _encode(self, f: Formula) -> LinearExpr:  # noqa: C901
        match f:
            case Const0():
                return LinearExpr.const(0)
            case Const1():
                return LinearExpr.const(1)
            case Var(name=name):
                if name not in self.inputs:
                    self.inputs[name] = len(self.variables)
                    return self.new(name, VariableKind.CONTINUOUS)
                return LinearExpr.column(self.inputs[name])
            case Impl(left=left, right=Const0()):
                return 1 - self.value(left)
            case Impl(left=left, right=right):
                a, b = self.value(left), self.value(right)
                z, d = self.node()
                self.add(z, Sense.LE, 1 - a + b)
                self.add(z, Sense.GE, 1 - d)
                self.add(z, Sense.GE, b - a + d)
                return z
            case Fuse(left=left, right=right):
                a, b = self.value(left), self.value(right)
                z, d = self.node()
                self.add(z, Sense.GE, a + b - 1)
                self.add(z, Sense.LE, a + b - 1 + d)
                self.add(z, Sense.LE, 1 - d)
                return z
            case Meet(left=left, right=right):
                a, b = self.value(left), self.value(right)
                z, d = self.node()
                self.add(z, Sense.LE, a)
                self.add(z, Sense.LE, b)
                self.add(z, Sense.GE, a - d)
                self.add(z, Sense.GE, b - (1 - d))
                return z
            case Join(left=left, right=right):
                a, b = self.value(left), self.value(right)
                z, d = self.node()
                self.add(z, Sense.GE, a)
                self.add(z, Sense.GE, b)
                self.add(z, Sense.LE, a + d)
                self.add(z, Sense.LE, b + (1 - d))
                return z
            case Power(exponent=0):
                return LinearExpr.const(1)
            case Power(body=body, exponent=1):
                return self.value(body)
            case Power(body=body, exponent=m):
                a = self.value(body)
                z, d = self.node()
                linear = m * a - (m - 1)
                self.add(z, Sense.GE, linear)
                self.add(z, Sense.LE, linear + (m - 1) * d)
                self.add(z, Sense.LE, 1 - d)
                return z
            case Delta():
                raise DeltaNotSupportedError
            case Box() | Diamond():
                msg = "Modal formula reached the propositional encoder"
                raise ModalFormulaError(msg)

    def force_top(self, f: Formula) -> None:
        """Constrain `f` to evaluate to 1 without a node variable for `f` itself."""
        match f:
            case Const1() | Power(exponent=0):
                pass
            case Impl(left=left, right=right):
                self.add(self.value(left), Sense.LE, self.value(right))
            case Fuse(left=left, right=right) | Meet(left=left, right=right):
                self.force_top(left)
                self.force_top(right)
            case Power(body=body):
                self.force_top(body)
            case Join(left=left, right=right):
                a, b = self.value(left), self.value(right)
                d = self.new(f"_d{len(self.variables)}", VariableKind.BINARY)
                self.add(a, Sense.GE, 1 - d)
                self.add(b, Sense.GE, d)
            case _:
                self.add(self.value(f), Sense.EQ, 1)


def encode_milp(ps: PropSequent) -> MilpEncoding:
    encoder = _Encoder()
    for premise in ps.premises:
        encoder.force_top(premise)
    conclusion = encoder.value(ps.conclusion)

    enc = MilpEncoding(
        tuple(encoder.variables),
        tuple(encoder.constraints),
        dict(encoder.inputs),
        dict(encoder.nodes),
        conclusion,
    )
    logger.debug(
        "Encoded %d variables (%d binary) under %d constraints",
        len(enc.variables),
        len(enc.binaries),
        len(enc.constraints),
    )
    return enc


def complete_binaries(enc: MilpEncoding, point: Mapping[int, Fraction]) -> dict[int, int] | None:
    """Smallest binary assignment making the continuous `point` feasible, or None.

    Each constraint mentions at most one binary, so binaries are chosen independently.
    """
    binaries = set(enc.binaries)
    by_binary: dict[int | None, list[LinearConstraint]] = {}
    for con in enc.constraints:
        key = next((j for j in con.coeffs if j in binaries), None)
        by_binary.setdefault(key, []).append(con)

    def satisfied(con: LinearConstraint, values: Mapping[int, Fraction]) -> bool:
        lhs = sum((a * values[j] for j, a in con.coeffs.items()), Fraction(0))
        match con.sense:
            case Sense.LE:
                return lhs <= con.rhs
            case Sense.GE:
                return lhs >= con.rhs
            case Sense.EQ:
                return lhs == con.rhs

    if not all(satisfied(con, point) for con in by_binary.get(None, [])):
        return None

    chosen: dict[int, int] = {}
    for j in sorted(binaries):
        for bit in (0, 1):
            values = {**point, j: Fraction(bit)}
            if all(satisfied(con, values) for con in by_binary.get(j, [])):
                chosen[j] = bit
                break
        else:
            return None
    return chosen
