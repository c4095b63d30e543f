"""Benchmark harness: seeded runs, aggregation, invariant checks and outputs."""

from .invariants import check_run
from .loader import load_experiment
from .outputs import emit_outputs, prepare_output_dir, read_run_csv, run_csv_name
from .runner import (
    RunResult,
    SuiteResult,
    aggregate_runs,
    build_schedule,
    noise_moment,
    run_single,
    run_suite,
)
from .schemas import (
    CSV_COLUMNS,
    AlgoAggregate,
    ExperimentConfig,
    InvariantCheck,
    NoiseMoment,
    ParamMode,
    RoundRecord,
    RunFailure,
    ScheduleOverrides,
    SuiteSummary,
)
from .selfcheck import self_checks

__all__ = [
    # Config
    "ExperimentConfig",
    "ParamMode",
    "ScheduleOverrides",
    "load_experiment",
    "build_schedule",
    # Runs
    "RoundRecord",
    "RunResult",
    "SuiteResult",
    "run_single",
    "run_suite",
    "aggregate_runs",
    "noise_moment",
    "NoiseMoment",
    # Checks
    "InvariantCheck",
    "check_run",
    "self_checks",
    # Outputs
    "SuiteSummary",
    "AlgoAggregate",
    "RunFailure",
    "CSV_COLUMNS",
    "emit_outputs",
    "prepare_output_dir",
    "read_run_csv",
    "run_csv_name",
]
