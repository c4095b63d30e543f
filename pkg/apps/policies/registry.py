"""Policy names accepted by the harness."""

from __future__ import annotations

from collections.abc import Callable
from typing import Literal, get_args

from apps.core.errors import InvalidArgumentError
from apps.estimator import ScheduleParams

from .base import Policy
from .crhvt import CrHvtPolicy, hvtucb_policy
from .gadaoful import GAdaOfulPolicy
from .oful import OfulPolicy

PolicyName = Literal["crhvt", "hvtucb", "oful", "gadaoful"]
POLICY_NAMES: tuple[str, ...] = get_args(PolicyName)

# Policies whose schedule carries the σ/w invariants.
ROBUST_OMD_POLICIES = frozenset({"crhvt", "hvtucb"})

_FACTORIES: dict[str, Callable[[ScheduleParams], Policy]] = {
    "crhvt": CrHvtPolicy,
    "hvtucb": hvtucb_policy,
    "oful": OfulPolicy,
    "gadaoful": GAdaOfulPolicy,
}


def make_policy(name: str, params: ScheduleParams) -> Policy:
    """Build a fresh policy instance by name."""
    try:
        factory = _FACTORIES[name]
    except KeyError:
        raise InvalidArgumentError(
            f"unknown policy {name!r}", {"choices": list(POLICY_NAMES)}
        )
    return factory(params)
