from __future__ import annotations

from pydantic import BaseModel, Field


class BaseConfig(BaseModel, extra="forbid"):
    """Root of the configuration file models. Unknown keys are rejected."""

    version: int = Field(default=1, ge=1)
