"""Robust OMD estimator: schedules, per-round scale/threshold, update."""

from .omd import (
    TAU_SENTINEL,
    compute_sigma,
    compute_tau,
    compute_w,
    effective_nu,
    omd_step,
)
from .schedule import BETA_SCALE, beta_floor, compute_beta, compute_kappa, compute_tau0
from .schemas import KappaVariant, MomentMode, ScheduleParams
from .state import EstimatorState, RoundDiagnostics, SigmaBranch, init_estimator

__all__ = [
    # Schemas
    "ScheduleParams",
    "MomentMode",
    "KappaVariant",
    # Schedule
    "BETA_SCALE",
    "beta_floor",
    "compute_kappa",
    "compute_tau0",
    "compute_beta",
    # State
    "EstimatorState",
    "RoundDiagnostics",
    "SigmaBranch",
    "init_estimator",
    # Round update
    "TAU_SENTINEL",
    "effective_nu",
    "compute_sigma",
    "compute_w",
    "compute_tau",
    "omd_step",
]
