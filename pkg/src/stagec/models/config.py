"""Compiler configuration, loaded from YAML."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from stagec.models.types import Phase


class CompilerConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    version: Literal["0.1"] = "0.1"
    profile: Literal["full", "circuit"] = "full"
    phase: Phase = "src"
    entry: str = Field("main", pattern=r"^[a-z_][A-Za-z0-9_']*$")
    max_table_inputs: int = Field(16, ge=1, le=20)
    color: bool = True
