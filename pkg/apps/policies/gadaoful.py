"""Full re-solve baseline over a pseudo-Huber objective.

Every round appends the observation to the history and minimizes

    F(θ) = Σ_s φ_{τ_s}((r_s − ⟨x_s, θ⟩)/σ_s) + (λ/2)‖θ‖²   over ‖θ‖₂ ≤ S

from a warm start by projected gradient descent with Armijo backtracking.
Each solver iteration touches the whole history, so the per-round cost grows
linearly with t. The σ_s and τ_s schedules approximate the published
algorithm's orders; they are not a value-exact replica.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from apps.core.types import Mat, Vec, as_vec
from apps.estimator import (
    RoundDiagnostics,
    ScheduleParams,
    SigmaBranch,
    compute_kappa,
    compute_tau0,
    effective_nu,
)
from apps.linalg import SpdState, mahalanobis_norm, mahalanobis_norms, rank_one_update, spd_init
from apps.losses import pseudo_huber_deriv, pseudo_huber_value

from .base import Policy, as_decision_set, ucb_argmax

logger = logging.getLogger(__name__)

GRADIENT_TOL = 1e-8
ARMIJO_C = 1e-4
ARMIJO_SHRINK = 0.5
MAX_BACKTRACKS = 60


def iteration_cap(T: int) -> int:
    """``500·⌈log T⌉`` solver iterations per round (at least 500)."""
    return 500 * max(1, math.ceil(math.log(T)))


@dataclass
class SolveResult:
    theta: Vec
    iterations: int
    converged: bool
    objective_trace: list[float]


@dataclass
class GAdaOfulState:
    """Append-only history plus the current estimate.

    The history lives in preallocated buffers; ``size`` rows are filled.
    ``spd`` is the σ-weighted Gram matrix ``λI + Σ x xᵀ/σ_s²`` used for σ_s and
    for the exploration bonus.
    """

    X: Mat
    r: Vec
    sigma: Vec
    tau: Vec
    theta_hat: Vec
    spd: SpdState
    tau0: float
    kappa: float
    size: int = 0
    last_iterations: int = 0
    last_converged: bool = True
    last_objective_trace: list[float] = field(default_factory=list)
    last_diagnostics: RoundDiagnostics | None = None

    @property
    def history(self) -> list[tuple[Vec, float, float, float]]:
        """``(x_s, r_s, σ_s, τ_s)`` in arrival order."""
        n = self.size
        return list(
            zip(self.X[:n], self.r[:n].tolist(), self.sigma[:n].tolist(), self.tau[:n].tolist(), strict=True)
        )

    def _grow(self) -> None:
        capacity = max(16, 2 * self.X.shape[0])
        d = self.X.shape[1]
        self.X = np.concatenate([self.X, np.zeros((capacity - self.X.shape[0], d))])
        for name in ("r", "sigma", "tau"):
            buf = getattr(self, name)
            setattr(self, name, np.concatenate([buf, np.zeros(capacity - buf.shape[0])]))


def init_gadaoful(p: ScheduleParams) -> GAdaOfulState:
    kappa = compute_kappa(p)
    return GAdaOfulState(
        X=np.zeros((p.T, p.d)),
        r=np.zeros(p.T),
        sigma=np.ones(p.T),
        tau=np.ones(p.T),
        theta_hat=np.zeros(p.d),
        spd=spd_init(p.lam, p.d),
        tau0=compute_tau0(p, kappa),
        kappa=kappa,
    )


def project_l2_ball(theta: Vec, S: float) -> Vec:
    norm = float(np.linalg.norm(theta))
    return theta if norm <= S else theta * (S / norm)


def pseudo_huber_objective(theta: Vec, X: Mat, r: Vec, sigma: Vec, tau: Vec, lam: float) -> float:
    z = (r - X @ theta) / sigma
    return float(np.sum(pseudo_huber_value(z, tau))) + 0.5 * lam * float(theta @ theta)


def pseudo_huber_gradient(theta: Vec, X: Mat, r: Vec, sigma: Vec, tau: Vec, lam: float) -> Vec:
    z = (r - X @ theta) / sigma
    return -(X.T @ (pseudo_huber_deriv(z, tau) / sigma)) + lam * theta


def solve_pseudo_huber_ridge(
    X: Mat,
    r: Vec,
    sigma: Vec,
    tau: Vec,
    lam: float,
    S: float,
    theta0: Vec,
    max_iter: int,
    tol: float = GRADIENT_TOL,
) -> SolveResult:
    """Projected gradient with Barzilai-Borwein trial steps and Armijo backtracking.

    Stops when the gradient mapping ``‖θ − P(θ − ηg)‖/η`` drops below ``tol``.
    The objective is non-increasing along the accepted iterates.
    """
    theta = project_l2_ball(np.asarray(theta0, dtype=np.float64), S)
    f = pseudo_huber_objective(theta, X, r, sigma, tau, lam)
    g = pseudo_huber_gradient(theta, X, r, sigma, tau, lam)
    # φ'' ≤ 1, so this bounds the curvature of F.
    lipschitz = lam + float(np.sum(np.einsum("ij,ij->i", X, X) / sigma**2))
    step = 1.0 / lipschitz
    trace = [f]

    for iteration in range(1, max_iter + 1):
        for _ in range(MAX_BACKTRACKS):
            candidate = project_l2_ball(theta - step * g, S)
            diff = candidate - theta
            f_candidate = pseudo_huber_objective(candidate, X, r, sigma, tau, lam)
            if f_candidate <= f + ARMIJO_C * float(g @ diff):
                break
            step *= ARMIJO_SHRINK
        else:
            return SolveResult(theta, iteration, False, trace)

        mapping_norm = float(np.linalg.norm(diff)) / step
        g_new = pseudo_huber_gradient(candidate, X, r, sigma, tau, lam)
        y = g_new - g
        curvature = float(diff @ y)
        theta, f, g = candidate, f_candidate, g_new
        trace.append(f)
        if mapping_norm <= tol:
            return SolveResult(theta, iteration, True, trace)
        step = float(diff @ diff) / curvature if curvature > 0 else 1.0 / lipschitz

    return SolveResult(theta, max_iter, False, trace)


def gadaoful_sigma(
    x: Vec, nu_t: float, state: GAdaOfulState, p: ScheduleParams
) -> tuple[float, SigmaBranch]:
    """``max{ν_s, σ_min, √C·d^{−1/4}·‖x‖_{V_{s−1}⁻¹}^{1/2}}`` and the winning branch."""
    corruption = math.sqrt(p.corruption_budget) * p.d**-0.25 * math.sqrt(mahalanobis_norm(state.spd, x))
    sigma, branch = effective_nu(nu_t, p), SigmaBranch.NU
    for value, name in ((p.sigma_min, SigmaBranch.SIGMA_MIN), (corruption, SigmaBranch.CORRUPTION)):
        if value > sigma:
            sigma, branch = value, name
    return sigma, branch


def gadaoful_observe(
    state: GAdaOfulState, x: Vec, r: float, nu_t: float, p: ScheduleParams
) -> GAdaOfulState:
    """Append the round and re-solve the whole objective. Mutates and returns ``state``."""
    x = as_vec(x, p.d)
    sigma, branch = gadaoful_sigma(x, nu_t, state, p)
    w = mahalanobis_norm(state.spd, x) / sigma
    s = state.size + 1
    if state.size == state.X.shape[0]:
        state._grow()
    n = state.size
    state.X[n] = x
    state.r[n] = float(r)
    state.sigma[n] = sigma
    state.tau[n] = state.tau0 * math.sqrt(s)
    state.size = s
    if np.any(x):
        state.spd = rank_one_update(state.spd, x, 1.0 / (sigma * sigma))

    result = solve_pseudo_huber_ridge(
        state.X[:s],
        state.r[:s],
        state.sigma[:s],
        state.tau[:s],
        p.lam,
        p.S,
        state.theta_hat,
        iteration_cap(p.T),
    )
    if not result.converged:
        logger.warning("pseudo-Huber solve hit its limit at round %d (%d iterations)", s, result.iterations)
    state.theta_hat = result.theta
    state.last_iterations = result.iterations
    state.last_converged = result.converged
    state.last_objective_trace = result.objective_trace
    state.last_diagnostics = RoundDiagnostics(
        sigma=sigma,
        w=w,
        tau=float(state.tau[n]),
        beta=gadaoful_radius(s, p),
        branch=branch,
        projection_iterations=result.iterations,
    )
    return state


def gadaoful_radius(t: int, p: ScheduleParams) -> float:
    """``√(d·log((1 + tL²/(σ_min²λ))/δ)) + √λ·S`` on the σ-normalized scale."""
    growth = 1.0 + t * p.L**2 / (p.sigma_min**2 * p.lam)
    return math.sqrt(p.d * math.log(growth / p.delta)) + math.sqrt(p.lam) * p.S


class GAdaOfulPolicy(Policy):
    """UCB over the re-solved pseudo-Huber estimate."""

    name = "gadaoful"

    def __init__(self, params: ScheduleParams):
        super().__init__(params)
        self.state = init_gadaoful(params)

    def select(self, decision_set: Mat | Sequence[Vec]) -> int:
        X = as_decision_set(decision_set, self.params.d, self.params.L)
        beta = gadaoful_radius(self.state.size, self.params)
        return ucb_argmax(X @ self.state.theta_hat + beta * mahalanobis_norms(self.state.spd, X))

    def observe(self, x: Vec, r: float, nu_t: float) -> None:
        gadaoful_observe(self.state, x, r, nu_t, self.params)

    @property
    def rounds(self) -> int:
        return self.state.size

    @property
    def theta_hat(self) -> Vec:
        return self.state.theta_hat

    @property
    def diagnostics(self) -> RoundDiagnostics | None:
        return self.state.last_diagnostics
