"""Estimator schemas package."""

from .schedule_schema import KappaVariant, MomentMode, ScheduleParams

__all__ = [
    "ScheduleParams",
    "MomentMode",
    "KappaVariant",
]
