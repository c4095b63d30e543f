"""Per-round scale, threshold and the two-step mirror-descent update.

Round ``t`` (1-based) reads ``V_{t−1}`` and ``β_{t−1}`` from the incoming
state, then:

    σ_t  = max{ν_t, σ_min, √(2β_{t−1}/(τ₀√α t^e))·‖x‖_{V⁻¹}, √C κ^{−1/4}‖x‖_{V⁻¹}^{1/2}}
    w_t  = ‖x/σ_t‖_{V_{t−1}⁻¹} / √α
    τ_t  = τ₀ √(1+w_t²)/w_t · t^e
    V_t  = V_{t−1} + x xᵀ/(α σ_t²)
    θ̃    = θ̂_t − V_t⁻¹ ∇ℓ_t(θ̂_t)
    θ̂_{t+1} = argmin_{‖θ‖₂ ≤ S} ‖θ − θ̃‖_{V_t}
"""

from __future__ import annotations

import math
import sys
from dataclasses import replace

import numpy as np

from apps.core.errors import InvalidArgumentError, NumericFailureError
from apps.core.types import Vec, as_vec
from apps.linalg import mahalanobis_norm, rank_one_update, solve_ball_projection
from apps.losses import loss_gradient

from .schedule import compute_beta
from .schemas import MomentMode, ScheduleParams
from .state import EstimatorState, RoundDiagnostics, SigmaBranch

# Returned as τ_t when w_t = 0. A zero action has a zero loss gradient, so
# omd_step skips the gradient entirely and this value is never consumed.
TAU_SENTINEL = sys.float_info.max


def _check_round(t: int) -> None:
    if t < 1:
        raise InvalidArgumentError("round index must be at least 1", {"t": t})


def effective_nu(nu_t: float, p: ScheduleParams) -> float:
    """ν_t from the environment, or the global bound when configured."""
    if p.moment_mode is MomentMode.GLOBAL_BOUND:
        return float(p.nu)  # type: ignore[arg-type]
    if not nu_t > 0:
        raise InvalidArgumentError("nu_t must be positive", {"nu_t": nu_t})
    return float(nu_t)


def compute_sigma(
    t: int, x: Vec, nu_t: float, state: EstimatorState, p: ScheduleParams
) -> tuple[float, SigmaBranch]:
    """Scale σ_t and the branch of the max that produced it."""
    _check_round(t)
    norm = mahalanobis_norm(state.spd, x)
    confidence = math.sqrt(
        2.0 * state.beta_prev / (state.tau0 * math.sqrt(p.alpha) * t**p.moment_exponent)
    )
    candidates = (
        (effective_nu(nu_t, p), SigmaBranch.NU),
        (p.sigma_min, SigmaBranch.SIGMA_MIN),
        (confidence * norm, SigmaBranch.CONFIDENCE),
        (math.sqrt(p.corruption_budget) * state.kappa**-0.25 * math.sqrt(norm), SigmaBranch.CORRUPTION),
    )
    sigma, branch = candidates[0]
    for value, name in candidates[1:]:
        if value > sigma:
            sigma, branch = value, name
    return sigma, branch


def compute_w(x: Vec, sigma_t: float, state: EstimatorState, p: ScheduleParams) -> float:
    """``‖x/σ_t‖_{V_{t−1}⁻¹} / √α``."""
    if not sigma_t > 0:
        raise InvalidArgumentError("sigma must be positive", {"sigma": sigma_t})
    return mahalanobis_norm(state.spd, x) / (sigma_t * math.sqrt(p.alpha))


def compute_tau(t: int, w_t: float, tau0: float, p: ScheduleParams) -> float:
    """Huber threshold τ_t; :data:`TAU_SENTINEL` when ``w_t = 0``."""
    _check_round(t)
    if w_t == 0.0:
        return TAU_SENTINEL
    return tau0 * math.sqrt(1.0 + w_t * w_t) / w_t * t**p.moment_exponent


def omd_step(
    state: EstimatorState,
    x: Vec,
    r: float,
    sigma_t: float,
    tau_t: float,
    p: ScheduleParams,
    branch: SigmaBranch | None = None,
) -> EstimatorState:
    """Apply round ``state.round + 1``: update V, take the preconditioned
    Huber-gradient step, project back onto the S-ball and advance β."""
    t = state.round + 1
    x = as_vec(x, p.d)
    w = compute_w(x, sigma_t, state, p)
    beta = compute_beta(t, p, state.tau0)

    if not np.any(x):
        diagnostics = RoundDiagnostics(
            sigma=sigma_t, w=0.0, tau=tau_t, beta=beta, branch=branch or SigmaBranch.NU
        )
        return replace(state, round=t, beta_prev=beta, diagnostics=diagnostics)
    if tau_t >= TAU_SENTINEL:
        raise NumericFailureError("sentinel threshold used with a nonzero action", {"round": t})

    try:
        spd = rank_one_update(state.spd, x, 1.0 / (p.alpha * sigma_t * sigma_t))
        grad = loss_gradient(state.theta_hat, x, r, sigma_t, tau_t).gradient
        theta_tilde = state.theta_hat - spd.Vinv @ grad
        projection = solve_ball_projection(spd, theta_tilde, p.S)
    except NumericFailureError as exc:
        exc.details.setdefault("round", t)
        raise

    step = p.alpha * w * w
    return EstimatorState(
        round=t,
        theta_hat=projection.theta,
        spd=spd,
        beta_prev=beta,
        kappa=state.kappa,
        tau0=state.tau0,
        diagnostics=RoundDiagnostics(
            sigma=sigma_t,
            w=w,
            tau=tau_t,
            beta=beta,
            branch=branch or SigmaBranch.NU,
            projection_iterations=projection.iterations,
        ),
        potential=state.potential + w * w,
        max_step=max(state.max_step, step),
        max_step_round=t if step > state.max_step else state.max_step_round,
    )
