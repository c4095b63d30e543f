"""Round-indexed estimator state."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from apps.core.types import Vec
from apps.linalg import SpdState, spd_init

from .schedule import compute_beta, compute_kappa, compute_tau0
from .schemas import ScheduleParams


class SigmaBranch(StrEnum):
    """Which candidate attained the max in σ_t (first one wins on ties)."""

    NU = "nu"
    SIGMA_MIN = "sigma_min"
    CONFIDENCE = "confidence"
    CORRUPTION = "corruption"


@dataclass(frozen=True, slots=True)
class RoundDiagnostics:
    """Quantities computed during the most recent round."""

    sigma: float
    w: float
    tau: float
    beta: float
    branch: SigmaBranch
    projection_iterations: int = 0


@dataclass(frozen=True, slots=True)
class EstimatorState:
    """Belief after ``round`` completed rounds.

    ``spd`` holds ``V_round`` and ``beta_prev`` holds ``β_round``; both are the
    "previous round" quantities when round ``round + 1`` is played.
    ``potential`` accumulates ``Σ w_s²``; ``max_step`` tracks ``max α w_s²`` and
    ``max_step_round`` the round that attained it.
    """

    round: int
    theta_hat: Vec
    spd: SpdState
    beta_prev: float
    kappa: float
    tau0: float
    diagnostics: RoundDiagnostics | None = None
    potential: float = 0.0
    max_step: float = 0.0
    max_step_round: int = 0


def init_estimator(p: ScheduleParams) -> EstimatorState:
    """θ̂₁ = 0, V₀ = λI, β₀ from the schedule."""
    kappa = compute_kappa(p)
    tau0 = compute_tau0(p, kappa)
    return EstimatorState(
        round=0,
        theta_hat=np.zeros(p.d),
        spd=spd_init(p.lam, p.d),
        beta_prev=compute_beta(0, p, tau0),
        kappa=kappa,
        tau0=tau0,
    )
