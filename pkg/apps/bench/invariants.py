"""Pass/fail property checks reported in ``summary.json``."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from .schemas import InvariantCheck

if TYPE_CHECKING:
    from .runner import RunResult

PREFIX_SUM_RTOL = 1e-9
STEP_CAP = 0.125
STEP_SLACK = 1e-9
MAX_INSTANT_REGRET = 2.0


def _check(
    run: RunResult, name: str, value: float, bound: float, passed: bool, note: str | None = None
) -> InvariantCheck:
    return InvariantCheck(
        algo=run.algo,
        seed=run.seed,
        name=name,
        value=float(value),
        bound=float(bound),
        passed=bool(passed),
        note=note,
    )


def check_run(run: RunResult) -> list[InvariantCheck]:
    """Regret bookkeeping and budget checks for every run, plus the
    elliptical-potential and step-size checks for the robust OMD policies."""
    checks: list[InvariantCheck] = []
    if run.records:
        instant = np.array([r.instant_regret for r in run.records])
        cum = np.array([r.cum_regret for r in run.records])
        drift = np.abs(np.cumsum(instant) - cum) / np.maximum(1.0, np.abs(cum))
        times = [r.per_round_time_ns for r in run.records]
        checks += [
            _check(run, "cum_regret_prefix_sum", drift.max(), PREFIX_SUM_RTOL, drift.max() <= PREFIX_SUM_RTOL),
            _check(
                run,
                "instant_regret_range",
                instant.max(),
                MAX_INSTANT_REGRET,
                instant.min() >= 0.0 and instant.max() <= MAX_INSTANT_REGRET,
            ),
            _check(run, "per_round_time_positive", min(times), 1, min(times) >= 1),
        ]

    checks.append(
        _check(
            run,
            "corruption_ledger",
            run.corruption_ledger,
            run.corruption_budget,
            run.corruption_ledger <= run.corruption_budget,
        )
    )

    if run.potential is not None and run.kappa is not None:
        checks.append(
            _check(run, "elliptical_potential", run.potential, 2.0 * run.kappa, run.potential <= 2.0 * run.kappa)
        )
    if run.max_step is not None:
        passed = run.max_step <= STEP_CAP + STEP_SLACK
        note = None
        if not passed and run.max_step_round == 1:
            note = (
                "exceeded at t=1: beta_0 is the floor sqrt(lambda(2+4S^2)), so the confidence "
                "term cannot lift sigma_1 above nu when nu is small"
            )
        elif not passed:
            note = f"exceeded at t={run.max_step_round}"
        checks.append(_check(run, "max_step", run.max_step, STEP_CAP, passed, note))
    return checks
