"""Fixed schedule quantities: κ, τ₀ and the confidence radius β_t.

All logarithms are natural.
"""

from __future__ import annotations

import math

from apps.core.errors import InvalidArgumentError

from .schemas import KappaVariant, ScheduleParams

# Leading constant of the confidence radius.
BETA_SCALE = 409.0


def compute_kappa(p: ScheduleParams) -> float:
    """``d·log(1 + L²T/(σ_min²·λ·α·d))``, or ``4σ_min²λd`` below the line for the lemma variant."""
    if p.kappa_variant is KappaVariant.LEMMA:
        denom = 4.0 * p.sigma_min**2 * p.lam * p.d
    else:
        denom = p.sigma_min**2 * p.lam * p.alpha * p.d
    return p.d * math.log1p(p.L**2 * p.T / denom)


def compute_tau0(p: ScheduleParams, kappa: float) -> float:
    """``√(2κ)·(log 3T)^e / (log(2T²/δ))^{1/(1+ε)}`` with ``e = (1−ε)/(2(1+ε))``."""
    if not kappa > 0:
        raise InvalidArgumentError("kappa must be positive", {"kappa": kappa})
    numer = math.sqrt(2.0 * kappa) * math.log(3.0 * p.T) ** p.moment_exponent
    return numer / p.confidence_log ** (1.0 / (1.0 + p.epsilon))


def beta_floor(p: ScheduleParams) -> float:
    """``√(λ(2 + 4S²))``, the radius before any observation."""
    return math.sqrt(p.lam * (2.0 + 4.0 * p.S * p.S))


def compute_beta(t: int, p: ScheduleParams, tau0: float) -> float:
    """Confidence radius ``β_t``; ``β_0`` is the regularization floor alone."""
    if t < 0:
        raise InvalidArgumentError("round index must be nonnegative", {"t": t})
    if t == 0:
        return beta_floor(p)
    growth = BETA_SCALE * p.confidence_log * tau0 * t**p.moment_exponent
    return growth + beta_floor(p)
