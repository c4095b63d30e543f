"""Library self-checks run by ``bench verify`` before the suite."""

from __future__ import annotations

import numpy as np

from apps.environment import CorruptionSpec, StreamPurpose, make_stream, unit_rows
from apps.linalg import rank_one_update, solve_ball_projection, spd_init
from apps.losses import loss_gradient

from .runner import run_single
from .schemas import ExperimentConfig, InvariantCheck, ParamMode

SYNC_TOL = 1e-8
KKT_TOL = 1e-6
FD_RTOL = 1e-4
FD_STEP = 1e-6
REDUCTION_ROUNDS = 200


def _library_check(name: str, value: float, bound: float, seed: int | None = None) -> InvariantCheck:
    return InvariantCheck(
        algo="library", seed=seed, name=name, value=float(value), bound=float(bound), passed=value <= bound
    )


def check_rank_one_sync(seed: int, d: int = 8, updates: int = 2000) -> InvariantCheck:
    """Worst ``|V V⁻¹ − I|`` over a stream of updates with weights spanning 1e-4..1e4."""
    rng = make_stream(seed, StreamPurpose.DECISION_SETS)
    state = spd_init(1.0, d)
    worst = 0.0
    for x, log_weight in zip(unit_rows(rng, updates, d), rng.uniform(-4.0, 4.0, updates), strict=True):
        state = rank_one_update(state, x, 10.0**log_weight)
        worst = max(worst, state.sync_error())
    return _library_check("rank_one_sync", worst, SYNC_TOL, seed)


def check_projection_kkt(seed: int, d: int = 5, trials: int = 50) -> InvariantCheck:
    """Stationarity, feasibility and complementary slackness of the ball projection."""
    rng = make_stream(seed, StreamPurpose.NOISE)
    worst = 0.0
    for _ in range(trials):
        state = spd_init(1.0, d)
        for x in unit_rows(rng, 3 * d, d):
            state = rank_one_update(state, x, float(rng.uniform(0.1, 10.0)))
        theta_tilde = rng.standard_normal(d) * 3.0
        result = solve_ball_projection(state, theta_tilde, 1.0)
        theta, mu = result.theta, result.multiplier
        stationarity = np.linalg.norm(state.V @ (theta - theta_tilde) + mu * theta)
        stationarity /= max(1.0, float(np.linalg.norm(state.V @ theta_tilde)))
        excess = max(0.0, float(np.linalg.norm(theta)) - 1.0)
        slack = mu * abs(float(np.linalg.norm(theta)) - 1.0)
        again = solve_ball_projection(state, theta, 1.0).theta
        worst = max(worst, stationarity, excess, slack, float(np.max(np.abs(again - theta))))
    return _library_check("projection_kkt", worst, KKT_TOL, seed)


def check_huber_gradient(seed: int, d: int = 6, trials: int = 200) -> InvariantCheck:
    """Analytic Huber gradient against central finite differences."""
    rng = make_stream(seed, StreamPurpose.THETA_STAR)
    worst = 0.0
    for _ in range(trials):
        theta = rng.standard_normal(d)
        x = rng.standard_normal(d)
        r = float(rng.standard_normal() * 3.0)
        sigma = float(rng.uniform(0.2, 2.0))
        tau = float(rng.uniform(0.2, 3.0))
        evaluation = loss_gradient(theta, x, r, sigma, tau)
        if abs(abs(evaluation.residual) - tau) < 1e-3:
            continue
        numeric = np.empty(d)
        for i in range(d):
            step = np.zeros(d)
            step[i] = FD_STEP
            upper = loss_gradient(theta + step, x, r, sigma, tau).value
            lower = loss_gradient(theta - step, x, r, sigma, tau).value
            numeric[i] = (upper - lower) / (2.0 * FD_STEP)
        error = np.linalg.norm(numeric - evaluation.gradient) / max(1.0, float(np.linalg.norm(evaluation.gradient)))
        worst = max(worst, float(error))
    return _library_check("huber_gradient_fd", worst, FD_RTOL, seed)


def check_zero_budget_reduction(config: ExperimentConfig, seed: int) -> InvariantCheck:
    """crhvt with C = 0 and hvtucb must play identical trajectories."""
    short = config.model_copy(
        update={
            "T": min(config.T, REDUCTION_ROUNDS),
            "corruption": CorruptionSpec(variant=config.corruption.variant, budget=0.0),
            "param_mode": ParamMode(mode="unknown_nu", nu=config.param_mode.nu)
            if config.param_mode.replaces_nu
            else ParamMode(),
        }
    )
    runs = [run_single(short, algo, seed) for algo in ("crhvt", "hvtucb")]
    traces = [
        [(r.instant_regret, r.sigma_t, r.w_t, r.tau_t, r.beta_t, r.active_sigma_branch) for r in run.records]
        for run in runs
    ]
    mismatches = sum(a != b for a, b in zip(*traces, strict=False)) + abs(len(traces[0]) - len(traces[1]))
    return InvariantCheck(
        algo="hvtucb",
        seed=seed,
        name="zero_budget_reduction",
        value=float(mismatches),
        bound=0.0,
        passed=mismatches == 0,
    )


def self_checks(config: ExperimentConfig) -> list[InvariantCheck]:
    seed = config.seeds[0]
    return [
        check_rank_one_sync(seed),
        check_projection_kkt(seed),
        check_huber_gradient(seed),
        check_zero_budget_reduction(config, seed),
    ]
