"""Huber and pseudo-Huber losses and the round-loss gradient.

The scalar functions accept floats or arrays; a scalar input returns a float.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from apps.core.errors import InvalidArgumentError
from apps.core.types import Vec, as_vec


def _check_tau(tau: ArrayLike) -> None:
    if not np.all(np.asarray(tau) > 0):
        raise InvalidArgumentError("tau must be positive")


def _scalar_or_array(value: np.ndarray, like: ArrayLike) -> float | np.ndarray:
    return float(value) if np.ndim(like) == 0 else value


def huber_value(x: ArrayLike, tau: ArrayLike) -> float | np.ndarray:
    """``x²/2`` inside ``|x| ≤ τ``, ``τ|x| − τ²/2`` outside."""
    _check_tau(tau)
    return _scalar_or_array(special.huber(tau, np.asarray(x, dtype=np.float64)), x)


def huber_deriv(x: ArrayLike, tau: ArrayLike) -> float | np.ndarray:
    """``clamp(x, −τ, τ)``; at ``|x| = τ`` this is ``±τ``."""
    _check_tau(tau)
    return _scalar_or_array(np.clip(np.asarray(x, dtype=np.float64), -tau, tau), x)


def pseudo_huber_value(x: ArrayLike, tau: ArrayLike) -> float | np.ndarray:
    """Normalized pseudo-Huber ``τ²(√(1 + (x/τ)²) − 1)``.

    Zero at zero, curvature one at the origin, slope approaching ``τ`` in the
    tails. The ``τ²(√(τ² + x²) − 1)`` form that sometimes appears in print is
    not zero at the origin and is not used. scipy evaluates it through
    ``expm1``/``log1p``, so small ``x`` keeps full precision.
    """
    _check_tau(tau)
    return _scalar_or_array(special.pseudo_huber(tau, np.asarray(x, dtype=np.float64)), x)


def pseudo_huber_deriv(x: ArrayLike, tau: ArrayLike) -> float | np.ndarray:
    """``x / √(1 + (x/τ)²)``, bounded by ``τ`` in absolute value."""
    _check_tau(tau)
    arr = np.asarray(x, dtype=np.float64)
    return _scalar_or_array(arr / np.sqrt(1.0 + (arr / tau) ** 2), x)


@dataclass(frozen=True, slots=True)
class LossEval:
    """Round loss at ``θ``: value, clipped residual and gradient."""

    value: float
    scalar_deriv: float
    gradient: Vec
    residual: float


def loss_gradient(theta: Vec, x: Vec, r: float, sigma: float, tau: float) -> LossEval:
    """Huber loss of the normalized residual ``z = (r − ⟨θ, x⟩)/σ`` and its gradient.

    The gradient in ``θ`` is ``−f'_τ(z) · x/σ``.
    """
    if not sigma > 0:
        raise InvalidArgumentError("sigma must be positive", {"sigma": sigma})
    _check_tau(tau)
    x = as_vec(x)
    theta = as_vec(theta, x.shape[0], "theta")
    z = (float(r) - float(theta @ x)) / sigma
    deriv = float(huber_deriv(z, tau))
    return LossEval(
        value=float(huber_value(z, tau)),
        scalar_deriv=deriv,
        gradient=-deriv * x / sigma,
        residual=z,
    )
