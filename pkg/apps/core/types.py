"""Array aliases used across the numeric apps."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from .errors import InvalidArgumentError

Vec = NDArray[np.float64]
Mat = NDArray[np.float64]


def as_vec(x, dim: int | None = None, name: str = "x") -> Vec:
    """Coerce ``x`` to a finite 1-D float64 vector, optionally of length ``dim``."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidArgumentError(f"{name} must be a 1-D vector, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise InvalidArgumentError(
            f"{name} has length {arr.shape[0]}, expected {dim}",
            {"expected": dim, "actual": int(arr.shape[0])},
        )
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError(f"{name} has non-finite entries")
    return arr
