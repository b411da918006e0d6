from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field

from common.base_model import BaseConfig
from features.kripke import SearchBounds
from features.lukdecide import EngineConfig
from schemas.enums import OutputFormat

DEFAULT_DELTA_ALGEBRA = "mv:3"


class WorkbenchConfig(BaseConfig):
    """Defaults read from `--config PATH`; command-line flags override them."""

    max_worlds: int = Field(default=3, ge=1)
    max_pcp_length: int = Field(default=6, ge=1)
    node_budget: int | None = Field(default=100_000, ge=1)
    time_budget_seconds: float | None = Field(default=None, gt=0)
    output: OutputFormat = OutputFormat.HUMAN


class RunConfig(BaseModel, frozen=True):
    command: tuple[str, ...] = Field(min_length=1)
    inputs: dict[str, Path] = {}
    algebra: str | None = None
    max_worlds: int = Field(ge=1)
    max_pcp_length: int = Field(ge=1)
    node_budget: int | None = Field(default=None, ge=1)
    time_budget_seconds: float | None = Field(default=None, gt=0)
    transitive_only: bool = False
    output: OutputFormat = OutputFormat.HUMAN

    def engine_config(self) -> EngineConfig:
        return EngineConfig(node_budget=self.node_budget, time_budget_seconds=self.time_budget_seconds)

    def search_bounds(self) -> SearchBounds:
        return SearchBounds(
            max_worlds=self.max_worlds,
            transitive_only=self.transitive_only,
            node_budget=self.node_budget,
        )

    def input(self, name: str) -> Path:
        return self.inputs[name]
