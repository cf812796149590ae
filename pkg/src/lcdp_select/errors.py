"""Exception types shared across the package."""

from __future__ import annotations


class EvaluationError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(EvaluationError):
    """Input or project state violates a documented invariant.

    Carries the individual violations so callers (CLI, HTTP API) can surface
    them as a machine-readable list.
    """

    def __init__(self, violations: list[str] | str, message: str | None = None):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__(message or "; ".join(self.violations))


class InfeasibleError(EvaluationError):
    """The requested operation has no feasible solution (e.g. floors summing above 1)."""


class StoreError(EvaluationError):
    """A project file cannot be read or written."""


class ChecksumMismatchError(StoreError):
    """Stored checksum does not match the file body (truncation or tampering)."""


class SchemaVersionError(StoreError):
    """File declares a schema version this build does not support."""


class StaleSnapshotError(EvaluationError):
    """A derived result was computed from a different project snapshot."""
