"""Error hierarchy shared by every app.

Each error carries a short machine-readable ``code`` next to its message, so the
runner can record why a run stopped and the CLI can map it to an exit code.
"""

from __future__ import annotations

from typing import Any


class BanditError(Exception):
    """Base error for the library."""

    code = "bandit-error"

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> dict[str, Any]:
        """Serializable form used in run summaries."""
        return {"code": self.code, "message": self.message, "details": self.details}


class InvalidArgumentError(BanditError, ValueError):
    """An operation was called outside its domain (bad shape, non-positive scale)."""

    code = "invalid-argument"


class NumericFailureError(BanditError, ArithmeticError):
    """A numeric routine produced NaN, lost definiteness, or failed to converge."""

    code = "numeric-failure"


class ConfigError(BanditError, ValueError):
    """Experiment or schedule configuration failed validation."""

    code = "invalid-config"


class OutputError(BanditError, OSError):
    """The output directory cannot be created or written."""

    code = "output-unwritable"
