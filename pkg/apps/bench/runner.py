"""Seeded single runs and multi-seed suites."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from pydantic import ValidationError

from apps.core.errors import ConfigError, NumericFailureError
from apps.environment import (
    BanditEnvironment,
    NoiseModel,
    StreamPurpose,
    empirical_moment,
    make_stream,
    sample_noise_batch,
)
from apps.estimator import MomentMode, ScheduleParams
from apps.policies import CrHvtPolicy, make_policy

from .invariants import check_run
from .schemas import AlgoAggregate, ExperimentConfig, NoiseMoment, RoundRecord, RunFailure, SuiteSummary

logger = logging.getLogger(__name__)

MOMENT_DRAWS = 1_000_000


@dataclass
class RunResult:
    """Records of one (algo, seed) run plus the end-of-run ledgers."""

    algo: str
    seed: int
    T: int
    records: list[RoundRecord] = field(default_factory=list)
    failure: RunFailure | None = None
    corruption_ledger: float = 0.0
    corruption_budget: float = 0.0
    kappa: float | None = None
    potential: float | None = None
    max_step: float | None = None
    max_step_round: int | None = None

    @property
    def completed(self) -> bool:
        return self.failure is None and len(self.records) == self.T

    @property
    def policy_time_ns(self) -> int:
        return sum(record.per_round_time_ns for record in self.records)


@dataclass
class SuiteResult:
    runs: list[RunResult]
    summary: SuiteSummary


def build_schedule(config: ExperimentConfig) -> ScheduleParams:
    """Schedule for the config, with unknown (C, ν) replaced by the configured bounds."""
    noise = config.noise
    mode = config.param_mode
    budget = config.corruption.budget if config.corruption.variant == "theta_flip" else 0.0
    values: dict = {
        "corruption_budget": mode.c_bar if mode.replaces_budget else budget,
        "nu": noise.declared_nu,
    }
    if mode.replaces_nu:
        values["moment_mode"] = MomentMode.GLOBAL_BOUND
        values["nu"] = mode.nu if mode.nu is not None else noise.declared_nu
    values.update(config.overrides.model_dump(exclude_none=True))
    try:
        return ScheduleParams.theorem_defaults(config.T, config.d, noise.declared_epsilon, **values)
    except ValidationError as exc:
        raise ConfigError("schedule parameters are invalid", {"errors": exc.errors(include_url=False)})


def run_single(config: ExperimentConfig, algo: str, seed: int) -> RunResult:
    """Play ``config.T`` rounds of ``algo`` on the environment seeded by ``seed``.

    Only the policy's ``select`` and ``observe`` calls are timed. A numeric
    failure stops the run and is recorded with its round.
    """
    params = build_schedule(config)
    policy = make_policy(algo, params)
    env = BanditEnvironment(
        config.d, config.K, config.noise, config.corruption, seed, context_seed=config.context_seed
    )
    result = RunResult(algo=algo, seed=seed, T=config.T, corruption_budget=env.adversary.budget)
    cum_regret = 0.0

    for t in range(1, config.T + 1):
        X = env.decision_set()
        try:
            start = time.perf_counter_ns()
            index = policy.select(X)
            elapsed = time.perf_counter_ns() - start
            x = X[index]
            feedback = env.pull(x)
            start = time.perf_counter_ns()
            policy.observe(x, feedback.r, feedback.nu_t)
            elapsed += time.perf_counter_ns() - start
        except NumericFailureError as exc:
            logger.warning("%s seed %d failed at round %d: %s", algo, seed, t, exc.message)
            result.failure = RunFailure(
                algo=algo, seed=seed, round=exc.details.get("round", t), code=exc.code, message=exc.message
            )
            break

        instant = env.regret(X, index)
        cum_regret += instant
        diag = policy.diagnostics
        result.records.append(
            RoundRecord(
                round=t,
                instant_regret=instant,
                cum_regret=cum_regret,
                per_round_time_ns=max(1, elapsed),
                sigma_t=None if diag is None else float(diag.sigma),
                w_t=None if diag is None else float(diag.w),
                tau_t=None if diag is None else float(diag.tau),
                beta_t=None if diag is None else float(diag.beta),
                active_sigma_branch=None if diag is None else str(diag.branch),
                c_t_applied=float(feedback.c),
            )
        )

    result.corruption_ledger = env.adversary.ledger
    if isinstance(policy, CrHvtPolicy):
        result.kappa = policy.state.kappa
        result.potential = policy.state.potential
        result.max_step = policy.state.max_step
        result.max_step_round = policy.state.max_step_round
    return result


def _run_task(task: tuple[ExperimentConfig, str, int]) -> RunResult:
    return run_single(*task)


def noise_moment(noise: NoiseModel, seed: int, draws: int = MOMENT_DRAWS) -> NoiseMoment:
    """Empirical ``E|η|^{1+ε}`` from a dedicated stream of ``seed``.

    Reported, never bounded: for centered Pareto the declared ν certifies the
    uncentered variable.
    """
    order = 1.0 + noise.declared_epsilon
    samples = sample_noise_batch(noise, make_stream(seed, StreamPurpose.MOMENTS), draws)
    return NoiseMoment(
        seed=seed,
        order=order,
        empirical=empirical_moment(samples, order),
        declared=noise.declared_nu**order,
        draws=draws,
    )


def aggregate_runs(algo: str, runs: list[RunResult]) -> AlgoAggregate:
    """Per-round mean and population std over the completed runs of one algo."""
    done = [run for run in runs if run.completed]
    if not done:
        return AlgoAggregate(algo=algo)
    regret = np.array([[r.cum_regret for r in run.records] for run in done])
    times = np.array([[r.per_round_time_ns for r in run.records] for run in done], dtype=np.float64)
    return AlgoAggregate(
        algo=algo,
        seeds=[run.seed for run in done],
        final_regret=[float(row[-1]) for row in regret],
        mean_cum_regret=regret.mean(axis=0).tolist(),
        std_cum_regret=regret.std(axis=0).tolist(),
        mean_time_ns=times.mean(axis=0).tolist(),
        std_time_ns=times.std(axis=0).tolist(),
        total_policy_time_ns=[run.policy_time_ns for run in done],
    )


def run_suite(config: ExperimentConfig, threads: int = 1) -> SuiteResult:
    """Run every (algo, seed) pair and aggregate per algo.

    With ``threads > 1`` runs execute in worker processes; results are merged
    in (algo, seed) config order either way.
    """
    tasks = [(config, algo, seed) for algo in config.algos for seed in config.seeds]
    logger.info("running %d runs of T=%d (%d worker(s))", len(tasks), config.T, threads)
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(tasks))) as pool:
            runs = list(pool.map(_run_task, tasks))
    else:
        runs = [_run_task(task) for task in tasks]

    summary = SuiteSummary(config=config.echo())
    for algo in config.algos:
        algo_runs = [run for run in runs if run.algo == algo]
        summary.aggregates.append(aggregate_runs(algo, algo_runs))
        for run in algo_runs:
            if run.failure is not None:
                summary.failures.append(run.failure)
            summary.invariants.extend(check_run(run))

    if config.noise.variant != "none":
        for seed in config.seeds:
            moment = noise_moment(config.noise, seed)
            summary.noise_moments.append(moment)
            logger.info(
                "seed %d: empirical E|eta|^%.2f = %.4g (declared nu^%.2f = %.4g)",
                seed,
                moment.order,
                moment.empirical,
                moment.order,
                moment.declared,
            )

    failed = [check for check in summary.invariants if not check.passed]
    for check in failed:
        logger.warning("invariant %s failed for %s seed %s", check.name, check.algo, check.seed)
    logger.info("suite finished: %d failure(s), %d failed check(s)", len(summary.failures), len(failed))
    return SuiteResult(runs=runs, summary=summary)
