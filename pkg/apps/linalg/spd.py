"""Symmetric positive-definite matrix state with a maintained explicit inverse."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from scipy import linalg as sla

from apps.core.errors import InvalidArgumentError, NumericFailureError
from apps.core.types import Mat, Vec, as_vec

# Rank-one updates between two from-scratch re-inversions of V.
REFRESH_INTERVAL = 512

# Radicands in [-RADICAND_SLACK, 0) are rounding noise and clamp to zero.
RADICAND_SLACK = 1e-12


class Metric(StrEnum):
    """Which matrix a Mahalanobis norm is taken in."""

    V = "V"
    VINV = "Vinv"


@dataclass(frozen=True, slots=True)
class SpdState:
    """A positive-definite ``V`` together with ``Vinv``.

    ``floor`` is the initialization scale λ: every eigenvalue of ``V`` stays at
    or above it because updates only add PSD terms. ``pending`` counts rank-one
    updates since the inverse was last recomputed from scratch.
    """

    V: Mat
    Vinv: Mat
    floor: float
    pending: int = 0

    @property
    def dim(self) -> int:
        return int(self.V.shape[0])

    def sync_error(self) -> float:
        """max-abs entry of ``V @ Vinv - I``."""
        return float(np.max(np.abs(self.V @ self.Vinv - np.eye(self.dim))))


def spd_init(lam: float, d: int) -> SpdState:
    """Return ``V = lam * I_d`` with its inverse."""
    if not lam > 0:
        raise InvalidArgumentError("lambda must be positive", {"lambda": lam})
    if int(d) != d or d < 1:
        raise InvalidArgumentError("dimension must be a positive integer", {"d": d})
    d = int(d)
    return SpdState(V=lam * np.eye(d), Vinv=np.eye(d) / lam, floor=float(lam))


def invert_spd(V: Mat) -> Mat:
    """Inverse of an SPD matrix through its Cholesky factor, symmetrized."""
    try:
        factor = sla.cho_factor(V, lower=True, check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericFailureError("matrix lost positive definiteness", {"reason": str(exc)})
    inv = sla.cho_solve(factor, np.eye(V.shape[0]))
    return 0.5 * (inv + inv.T)


def rank_one_update(state: SpdState, x: Vec, weight: float) -> SpdState:
    """Return the state for ``V + weight * x x^T``.

    The inverse follows the Sherman-Morrison identity and is rebuilt from
    ``V`` every ``REFRESH_INTERVAL`` updates. A zero ``x`` leaves the state as is.
    """
    if not weight > 0:
        raise InvalidArgumentError("weight must be positive", {"weight": weight})
    x = as_vec(x, state.dim)
    if not np.any(x):
        return state

    vinv_x = state.Vinv @ x
    denom = 1.0 + weight * float(x @ vinv_x)
    V = state.V + weight * np.outer(x, x)
    pending = state.pending + 1
    if pending >= REFRESH_INTERVAL:
        Vinv = invert_spd(V)
        pending = 0
    else:
        Vinv = state.Vinv - (weight / denom) * np.outer(vinv_x, vinv_x)

    if not (np.all(np.isfinite(V)) and np.all(np.isfinite(Vinv))):
        raise NumericFailureError(
            "rank-one update produced non-finite entries", {"weight": weight, "denom": denom}
        )
    return SpdState(V=V, Vinv=Vinv, floor=state.floor, pending=pending)


def mahalanobis_norm(state: SpdState, x: Vec, metric: Metric | str = Metric.VINV) -> float:
    """``sqrt(x^T A x)`` with ``A`` either ``V`` or ``Vinv``."""
    x = as_vec(x, state.dim)
    A = state.V if Metric(metric) is Metric.V else state.Vinv
    radicand = float(x @ A @ x)
    if radicand < 0.0:
        if radicand < -RADICAND_SLACK:
            raise NumericFailureError(
                "negative quadratic form", {"radicand": radicand, "metric": str(metric)}
            )
        return 0.0
    return float(np.sqrt(radicand))


def mahalanobis_norms(state: SpdState, X: Mat, metric: Metric | str = Metric.VINV) -> Vec:
    """Row-wise :func:`mahalanobis_norm` for a ``(K, d)`` matrix of vectors."""
    A = state.V if Metric(metric) is Metric.V else state.Vinv
    radicands = np.einsum("ij,jk,ik->i", X, A, X)
    if np.any(radicands < -RADICAND_SLACK):
        raise NumericFailureError("negative quadratic form", {"metric": str(metric)})
    return np.sqrt(np.maximum(radicands, 0.0))
