"""Common policy contract."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Sequence

import numpy as np

from apps.core.errors import InvalidArgumentError
from apps.core.types import Mat, Vec
from apps.estimator import RoundDiagnostics, ScheduleParams

# Actions may exceed L by this relative slack (unit vectors carry rounding).
NORM_SLACK = 1e-9


def as_decision_set(decision_set: Mat | Sequence[Vec], d: int, L: float | None = None) -> Mat:
    """Stack a decision set into a ``(K, d)`` float array and validate it."""
    X = np.asarray(decision_set, dtype=np.float64)
    if X.size == 0:
        raise InvalidArgumentError("decision set is empty")
    if X.ndim != 2 or X.shape[1] != d:
        raise InvalidArgumentError(
            f"decision set must have shape (K, {d})", {"shape": list(X.shape)}
        )
    if L is not None and np.any(np.linalg.norm(X, axis=1) > L * (1.0 + NORM_SLACK)):
        raise InvalidArgumentError("decision set contains an action with norm above L", {"L": L})
    return X


def ucb_argmax(scores: Vec) -> int:
    """Index of the largest score; ties go to the lowest index."""
    return int(np.argmax(scores))


class Policy(ABC):
    """A sequential arm-selection agent.

    ``select`` is deterministic given the internal state and the decision set;
    ``observe`` advances exactly one round.
    """

    name: str

    def __init__(self, params: ScheduleParams):
        self.params = params

    @abstractmethod
    def select(self, decision_set: Mat | Sequence[Vec]) -> int:
        """Return the index of the chosen action."""

    @abstractmethod
    def observe(self, x: Vec, r: float, nu_t: float) -> None:
        """Consume the reward of the chosen action."""

    @property
    @abstractmethod
    def rounds(self) -> int:
        """Completed rounds."""

    @property
    @abstractmethod
    def theta_hat(self) -> Vec:
        """Current parameter estimate."""

    @property
    def diagnostics(self) -> RoundDiagnostics | None:
        """Quantities from the last round, when the policy tracks them."""
        return None

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} t={self.rounds}>"
