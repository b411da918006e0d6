from __future__ import annotations

import logging
import time
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from .config import EngineConfig
from .exceptions import InfeasibleError, ResourceBudgetExceededError
from .milp import MilpEncoding
from .simplex import LpSolution, maximize

logger = logging.getLogger("Workbench").getChild("LukDecide")


@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class Countervaluation:
    """Valuation sending every premise to 1 and the conclusion to 1 − gap."""

    valuation: Mapping[str, Fraction]
    gap: Fraction


type PropVerdict = Valid | Countervaluation


@dataclass(frozen=True)
class _Incumbent:
    solution: LpSolution
    assignment: tuple[int, ...]


def _is_integral(value: Fraction) -> bool:
    return value.denominator == 1


def solve_milp(enc: MilpEncoding, config: EngineConfig | None = None) -> PropVerdict:
    """Depth-first branch-and-bound, the 0-branch first, on the lowest fractional binary.

    Relaxations whose optimum is at most 0, or strictly below the incumbent, are pruned; ties are
    explored. A node whose relaxation is integral is a leaf, so the smallest binary assignment wins
    among the optimal leaves visited, not among every optimal assignment.
    """
    config = config or EngineConfig()
    deadline = None if config.time_budget_seconds is None else time.monotonic() + config.time_budget_seconds
    binaries = enc.binaries

    best: _Incumbent | None = None
    stack: list[dict[int, int]] = [{}]
    explored = 0
    while stack:
        fixed = stack.pop()
        explored += 1
        if config.node_budget is not None and explored > config.node_budget:
            raise ResourceBudgetExceededError(f"node budget of {config.node_budget}")
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceBudgetExceededError(f"time budget of {config.time_budget_seconds}s")

        try:
            relaxed = maximize(enc.relaxation(fixed))
        except InfeasibleError:
            continue
        if relaxed.value <= 0 or (best is not None and relaxed.value < best.solution.value):
            continue

        branch = next((j for j in binaries if not _is_integral(relaxed.point[j])), None)
        if branch is not None:
            stack.append({**fixed, branch: 1})
            stack.append({**fixed, branch: 0})
            continue

        assignment = tuple(int(relaxed.point[j]) for j in binaries)
        if (
            best is None
            or relaxed.value > best.solution.value
            or (relaxed.value == best.solution.value and assignment < best.assignment)
        ):
            logger.debug("Incumbent gap %s after %d nodes", relaxed.value, explored)
            best = _Incumbent(relaxed, assignment)

    logger.info("Branch-and-bound explored %d nodes", explored)
    if best is None:
        return Valid()
    point = best.solution.point
    return Countervaluation({name: point[j] for name, j in enc.inputs.items()}, best.solution.value)
