from __future__ import annotations

from pydantic import BaseModel, Field


class EngineConfig(BaseModel, frozen=True):
    """Budgets for branch-and-bound. `None` means unbounded."""

    node_budget: int | None = Field(default=100_000, ge=1)
    time_budget_seconds: float | None = Field(default=None, gt=0)
