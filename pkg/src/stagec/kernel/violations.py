from __future__ import annotations

from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict

ViolationKind = Literal[
    "StageViolation",
    "PhaseViolation",
    "ScopeViolation",
    "TypeMismatch",
    "ArityViolation",
]


class Violation(BaseModel):
    """First typing rule a term breaks, with the path to the offending node."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: ViolationKind
    node: str
    message: str
    path: Tuple[str, ...] = ()

    def render(self) -> str:
        where = "/".join(self.path) or "<root>"
        return f"{self.kind} at {where} ({self.node}): {self.message}"
