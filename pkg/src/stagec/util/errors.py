"""Typed exceptions for the staging compiler."""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from stagec.kernel.violations import Violation


class StagecError(Exception):
    """Base class of every error the compiler reports to users."""

    kind: str = "Error"


class ConfigLoadError(StagecError):
    """Raised when a config file cannot be loaded or validated."""

    kind = "ConfigError"


class ReplayMismatch(StagecError):
    """Raised when an audit event is replayed against a different source."""

    kind = "ReplayMismatch"


# --- kernel ---


class KernelError(StagecError):
    kind = "KernelError"


class IllTypedTerm(KernelError):
    """A term failed validation; carries the first violation found."""

    def __init__(self, violation: "Violation") -> None:
        super().__init__(violation.render())
        self.violation = violation
        self.kind = violation.kind


class ShapeMismatch(KernelError):
    """Two embeddings (or an embedding and a context) do not line up."""

    kind = "ShapeMismatch"


class UnknownBuiltin(KernelError):
    kind = "UnknownBuiltin"


class BuiltinUnavailable(KernelError):
    """The builtin exists but not at the requested phase/stage."""

    kind = "BuiltinUnavailable"


# --- staging ---


class StagingError(StagecError):
    kind = "StagingError"


class StuckEvaluation(StagingError):
    """Evaluation reached a state the typing rules exclude.

    Only a validator or evaluator bug can raise this.
    """

    kind = "StuckEvaluation"


class InvariantFailure(StagingError):
    """A staged result broke a post-condition (e.g. kept a static node)."""

    kind = "InvariantFailure"


# --- circuits ---


class CircuitError(StagecError):
    kind = "CircuitError"


class NonCircuitConstruct(CircuitError):
    kind = "NonCircuitConstruct"

    def __init__(self, message: str, path: tuple[str, ...] = ()) -> None:
        where = "/".join(path) or "<root>"
        super().__init__(f"{message} (at {where})")
        self.path = path


class ArityMismatch(CircuitError):
    kind = "ArityMismatch"


class TooManyInputs(CircuitError):
    kind = "TooManyInputs"


# --- surface ---


class SurfaceError(StagecError):
    """An error tied to a position in a source file."""

    kind = "SurfaceError"

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ) -> None:
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column


class SurfaceSyntaxError(SurfaceError):
    kind = "SyntaxError"


class ElaborationError(SurfaceError):
    kind = "ElaborationError"


class TypeMismatch(ElaborationError):
    kind = "TypeMismatch"


class StageError(ElaborationError):
    kind = "StageError"


class UnboundIdentifier(ElaborationError):
    kind = "UnboundIdentifier"


class AnnotationRequired(ElaborationError):
    kind = "AnnotationRequired"
