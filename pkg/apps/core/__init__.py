"""Shared errors and array helpers."""

from .errors import (
    BanditError,
    ConfigError,
    InvalidArgumentError,
    NumericFailureError,
    OutputError,
)
from .types import Mat, Vec, as_vec

__all__ = [
    "BanditError",
    "ConfigError",
    "InvalidArgumentError",
    "NumericFailureError",
    "OutputError",
    "Mat",
    "Vec",
    "as_vec",
]
