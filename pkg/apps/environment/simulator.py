"""A full synthetic environment: instance, decision sets, noise, adversary."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from apps.core.types import Mat, Vec

from .adversary import AdversaryState, apply_corruption
from .instance import Instance, sample_decision_set, sample_instance
from .noise import sample_noise
from .regret import regret_increment
from .rng import StreamPurpose, make_stream
from .schemas import CorruptionSpec, NoiseModel


@dataclass(frozen=True, slots=True)
class Feedback:
    """What one pull produced. The learner sees ``r`` and ``nu_t`` only."""

    r: float
    r_prime: float
    eta: float
    c: float
    nu_t: float


class BanditEnvironment:
    """Sequential environment for one run.

    ``seed`` drives the noise stream. θ* and the decision sets come from
    ``context_seed`` when given (pinning contexts across runs), else from
    ``seed`` as well.
    """

    def __init__(
        self,
        d: int,
        K: int,
        noise: NoiseModel,
        corruption: CorruptionSpec,
        seed: int,
        context_seed: int | None = None,
    ):
        base = seed if context_seed is None else context_seed
        self.instance: Instance = sample_instance(base, d, K)
        self.noise = noise
        self.adversary = AdversaryState.from_spec(corruption)
        self._contexts = make_stream(base, StreamPurpose.DECISION_SETS)
        self._noise_rng = make_stream(seed, StreamPurpose.NOISE)
        self.round = 0

    @property
    def theta_star(self) -> Vec:
        return self.instance.theta_star

    def decision_set(self) -> Mat:
        """Decision set for the next round."""
        return sample_decision_set(self._contexts, self.instance.d, self.instance.K)

    def pull(self, x: Vec) -> Feedback:
        """Reward of action ``x``: mean plus noise, then the adversary."""
        self.round += 1
        eta = sample_noise(self.noise, self._noise_rng)
        r_prime = float(np.dot(x, self.theta_star)) + eta
        r, c, self.adversary = apply_corruption(self.adversary, x, self.theta_star, r_prime)
        return Feedback(r=r, r_prime=r_prime, eta=eta, c=c, nu_t=self.noise.nu_at(self.round))

    def regret(self, decision_set: Mat, chosen_index: int) -> float:
        return regret_increment(decision_set, chosen_index, self.theta_star)
