"""Arm-selection policies."""

from .base import Policy, as_decision_set, ucb_argmax
from .crhvt import CrHvtPolicy, crhvt_observe, crhvt_select, hvtucb_policy
from .gadaoful import (
    GAdaOfulPolicy,
    GAdaOfulState,
    SolveResult,
    gadaoful_observe,
    gadaoful_radius,
    gadaoful_sigma,
    init_gadaoful,
    pseudo_huber_objective,
    solve_pseudo_huber_ridge,
)
from .oful import OfulPolicy, oful_noise_scale, oful_radius
from .registry import POLICY_NAMES, ROBUST_OMD_POLICIES, PolicyName, make_policy

__all__ = [
    # Contract
    "Policy",
    "as_decision_set",
    "ucb_argmax",
    # Robust OMD agent
    "CrHvtPolicy",
    "crhvt_select",
    "crhvt_observe",
    "hvtucb_policy",
    # OFUL
    "OfulPolicy",
    "oful_radius",
    "oful_noise_scale",
    # Full re-solve baseline
    "GAdaOfulPolicy",
    "GAdaOfulState",
    "SolveResult",
    "init_gadaoful",
    "gadaoful_observe",
    "gadaoful_sigma",
    "gadaoful_radius",
    "pseudo_huber_objective",
    "solve_pseudo_huber_ridge",
    # Registry
    "PolicyName",
    "POLICY_NAMES",
    "ROBUST_OMD_POLICIES",
    "make_policy",
]
