"""Benchmark schemas package."""

from .config_schema import ExperimentConfig, ParamMode, ParamModeName, ScheduleOverrides
from .record_schema import CSV_COLUMNS, RoundRecord
from .summary_schema import (
    TIMING_FIELDS,
    AlgoAggregate,
    InvariantCheck,
    NoiseMoment,
    RunFailure,
    SuiteSummary,
)

__all__ = [
    # Config
    "ExperimentConfig",
    "ParamMode",
    "ParamModeName",
    "ScheduleOverrides",
    # Records
    "RoundRecord",
    "CSV_COLUMNS",
    # Summary
    "SuiteSummary",
    "AlgoAggregate",
    "InvariantCheck",
    "RunFailure",
    "NoiseMoment",
    "TIMING_FIELDS",
]
