from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

from .exceptions import InfeasibleError, UnboundedError

logger = logging.getLogger("Workbench").getChild("LukDecide")

ZERO = Fraction(0)


class Sense(StrEnum):
    LE = "<="
    GE = ">="
    EQ = "="


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: Mapping[int, Fraction]
    sense: Sense
    rhs: Fraction


@dataclass(frozen=True)
class LinearProgram:
    """maximize objective·x + constant  s.t. constraints, 0 ≤ x ≤ upper."""

    num_vars: int
    objective: Mapping[int, Fraction]
    constraints: tuple[LinearConstraint, ...]
    upper: tuple[Fraction | None, ...] = ()
    constant: Fraction = ZERO

    def with_constraints(self, extra: Sequence[LinearConstraint]) -> LinearProgram:
        return LinearProgram(self.num_vars, self.objective, (*self.constraints, *extra), self.upper, self.constant)


@dataclass(frozen=True)
class LpSolution:
    value: Fraction
    point: tuple[Fraction, ...]


@dataclass
class _Tableau:
    rows: list[list[Fraction]]
    rhs: list[Fraction]
    basis: list[int]
    costs: list[Fraction] = field(default_factory=list)
    value: Fraction = ZERO
    pivots: int = 0

    def price(self, objective: Sequence[Fraction]) -> None:
        """Reduced costs and objective value of `objective` for the current basis."""
        self.costs = list(objective)
        self.value = ZERO
        for row, rhs, basic in zip(self.rows, self.rhs, self.basis, strict=True):
            weight = objective[basic]
            if weight:
                self.value += weight * rhs
                for j, a in enumerate(row):
                    if a:
                        self.costs[j] -= weight * a

    def pivot(self, r: int, c: int) -> None:
        pivot_row = self.rows[r]
        factor = pivot_row[c]
        if factor != 1:
            pivot_row[:] = [a / factor for a in pivot_row]
            self.rhs[r] /= factor
        nonzero = [(j, a) for j, a in enumerate(pivot_row) if a]

        for i, row in enumerate(self.rows):
            scale = row[c]
            if i == r or not scale:
                continue
            for j, a in nonzero:
                row[j] -= scale * a
            self.rhs[i] -= scale * self.rhs[r]

        scale = self.costs[c]
        if scale:
            for j, a in nonzero:
                self.costs[j] -= scale * a
            self.value += scale * self.rhs[r]

        self.basis[r] = c
        self.pivots += 1

    def optimize(self, allowed: int) -> None:
        """Primal simplex over the first `allowed` columns with Bland's rule."""
        while True:
            entering = next((j for j in range(allowed) if self.costs[j] > 0), None)
            if entering is None:
                return
            candidates = [
                (self.rhs[i] / row[entering], self.basis[i], i) for i, row in enumerate(self.rows) if row[entering] > 0
            ]
            if not candidates:
                raise UnboundedError
            _, _, leaving = min(candidates)
            self.pivot(leaving, entering)


def _standard_rows(lp: LinearProgram) -> list[tuple[dict[int, Fraction], Sense, Fraction]]:
    rows = [(dict(con.coeffs), con.sense, con.rhs) for con in lp.constraints]
    rows.extend(({j: Fraction(1)}, Sense.LE, bound) for j, bound in enumerate(lp.upper) if bound is not None)

    normalized = []
    for coeffs, sense, rhs in rows:
        if rhs < 0:
            flipped = {Sense.LE: Sense.GE, Sense.GE: Sense.LE, Sense.EQ: Sense.EQ}[sense]
            normalized.append(({j: -a for j, a in coeffs.items()}, flipped, -rhs))
        else:
            normalized.append((coeffs, sense, rhs))
    return normalized


def maximize(lp: LinearProgram) -> LpSolution:
    """Exact two-phase simplex. Raises InfeasibleError or UnboundedError."""
    rows = _standard_rows(lp)
    n = lp.num_vars
    slack_count = sum(1 for _, sense, _ in rows if sense != Sense.EQ)
    artificial_count = sum(1 for _, sense, _ in rows if sense != Sense.LE)
    width = n + slack_count + artificial_count
    first_artificial = n + slack_count

    tableau = _Tableau([], [], [])
    slack, artificial = n, first_artificial
    for coeffs, sense, rhs in rows:
        row = [ZERO] * width
        for j, a in coeffs.items():
            row[j] += a
        match sense:
            case Sense.LE:
                row[slack] = Fraction(1)
                basic = slack
                slack += 1
            case Sense.GE:
                row[slack] = Fraction(-1)
                slack += 1
                row[artificial] = Fraction(1)
                basic = artificial
                artificial += 1
            case Sense.EQ:
                row[artificial] = Fraction(1)
                basic = artificial
                artificial += 1
        tableau.rows.append(row)
        tableau.rhs.append(rhs)
        tableau.basis.append(basic)

    if artificial_count:
        phase_one = [ZERO] * first_artificial + [Fraction(-1)] * artificial_count
        tableau.price(phase_one)
        tableau.optimize(width)
        if tableau.value < 0:
            raise InfeasibleError
        _drive_out_artificials(tableau, first_artificial)
        for row in tableau.rows:
            del row[first_artificial:]

    objective = [ZERO] * first_artificial
    for j, a in lp.objective.items():
        objective[j] = a
    tableau.price(objective)
    tableau.optimize(first_artificial)

    point = [ZERO] * n
    for basic, rhs in zip(tableau.basis, tableau.rhs, strict=True):
        if basic < n:
            point[basic] = rhs
    logger.debug("LP with %d rows solved in %d pivots", len(rows), tableau.pivots)
    return LpSolution(tableau.value + lp.constant, tuple(point))


def _drive_out_artificials(tableau: _Tableau, first_artificial: int) -> None:
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] < first_artificial:
            r += 1
            continue
        row = tableau.rows[r]
        column = next((j for j in range(first_artificial) if row[j]), None)
        if column is None:
            # redundant equality
            del tableau.rows[r], tableau.rhs[r], tableau.basis[r]
            continue
        tableau.pivot(r, column)
        r += 1
