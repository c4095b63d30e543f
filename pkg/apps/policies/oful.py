"""OFUL: ridge regression with an ellipsoidal confidence set (non-robust control)."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from apps.core.types import Mat, Vec, as_vec
from apps.estimator import ScheduleParams
from apps.linalg import SpdState, mahalanobis_norms, rank_one_update, spd_init

from .base import Policy, as_decision_set, ucb_argmax


def oful_radius(t: int, p: ScheduleParams, noise_scale: float) -> float:
    """``R√(d·log((1 + tL²/λ)/δ)) + √λ·S``."""
    return noise_scale * math.sqrt(
        p.d * math.log((1.0 + t * p.L**2 / p.lam) / p.delta)
    ) + math.sqrt(p.lam) * p.S


def oful_noise_scale(p: ScheduleParams) -> float:
    """R = ν when the declared noise has finite variance (ε = 1), else 1."""
    if p.epsilon == 1.0 and p.nu is not None:
        return float(p.nu)
    return 1.0


class OfulPolicy(Policy):
    """Ridge estimate ``θ̂ = (λI + Σ x xᵀ)⁻¹ Σ r x`` kept current with rank-one updates."""

    name = "oful"

    def __init__(self, params: ScheduleParams, noise_scale: float | None = None):
        super().__init__(params)
        self.noise_scale = oful_noise_scale(params) if noise_scale is None else noise_scale
        self.spd: SpdState = spd_init(params.lam, params.d)
        self.xr = np.zeros(params.d)
        self._theta = np.zeros(params.d)
        self._rounds = 0

    def select(self, decision_set: Mat | Sequence[Vec]) -> int:
        X = as_decision_set(decision_set, self.params.d, self.params.L)
        beta = oful_radius(self._rounds, self.params, self.noise_scale)
        return ucb_argmax(X @ self._theta + beta * mahalanobis_norms(self.spd, X))

    def observe(self, x: Vec, r: float, nu_t: float) -> None:
        x = as_vec(x, self.params.d)
        self.spd = rank_one_update(self.spd, x, 1.0)
        self.xr = self.xr + float(r) * x
        self._theta = self.spd.Vinv @ self.xr
        self._rounds += 1

    @property
    def rounds(self) -> int:
        return self._rounds

    @property
    def theta_hat(self) -> Vec:
        return self._theta
