"""The corruption- and heavy-tail-robust UCB agent."""

from __future__ import annotations

from collections.abc import Sequence

from apps.core.types import Mat, Vec, as_vec
from apps.estimator import (
    EstimatorState,
    RoundDiagnostics,
    ScheduleParams,
    compute_sigma,
    compute_tau,
    compute_w,
    init_estimator,
    omd_step,
)
from apps.linalg import mahalanobis_norms

from .base import Policy, as_decision_set, ucb_argmax


def crhvt_select(
    state: EstimatorState, decision_set: Mat | Sequence[Vec], p: ScheduleParams
) -> int:
    """argmax of ``⟨x, θ̂_t⟩ + β_{t−1}‖x‖_{V_{t−1}⁻¹}``, lowest index on ties."""
    X = as_decision_set(decision_set, p.d, p.L)
    scores = X @ state.theta_hat + state.beta_prev * mahalanobis_norms(state.spd, X)
    return ucb_argmax(scores)


def crhvt_observe(
    state: EstimatorState, x: Vec, r: float, nu_t: float, p: ScheduleParams
) -> EstimatorState:
    """σ_t, then w_t, then τ_t, then the OMD step. Cost does not depend on t."""
    t = state.round + 1
    x = as_vec(x, p.d)
    sigma, branch = compute_sigma(t, x, nu_t, state, p)
    w = compute_w(x, sigma, state, p)
    tau = compute_tau(t, w, state.tau0, p)
    return omd_step(state, x, r, sigma, tau, p, branch=branch)


class CrHvtPolicy(Policy):
    """UCB over the robust OMD estimate."""

    name = "crhvt"

    def __init__(self, params: ScheduleParams, name: str | None = None):
        super().__init__(params)
        if name is not None:
            self.name = name
        self.state = init_estimator(params)

    def select(self, decision_set: Mat | Sequence[Vec]) -> int:
        return crhvt_select(self.state, decision_set, self.params)

    def observe(self, x: Vec, r: float, nu_t: float) -> None:
        self.state = crhvt_observe(self.state, x, r, nu_t, self.params)

    @property
    def rounds(self) -> int:
        return self.state.round

    @property
    def theta_hat(self) -> Vec:
        return self.state.theta_hat

    @property
    def diagnostics(self) -> RoundDiagnostics | None:
        return self.state.diagnostics


def hvtucb_policy(params: ScheduleParams) -> CrHvtPolicy:
    """The heavy-tail-only agent: the same code path with a zero corruption budget."""
    return CrHvtPolicy(params.model_copy(update={"corruption_budget": 0.0}), name="hvtucb")
