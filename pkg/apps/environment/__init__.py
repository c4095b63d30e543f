"""Synthetic linear contextual bandit environment."""

from .adversary import AdversaryState, apply_corruption
from .instance import Instance, sample_decision_set, sample_instance, unit_rows
from .noise import empirical_moment, sample_noise, sample_noise_batch
from .regret import regret_increment
from .rng import StreamPurpose, make_stream
from .schemas import CorruptionSpec, NoiseModel, NoiseVariant
from .simulator import BanditEnvironment, Feedback

__all__ = [
    # Schemas
    "NoiseModel",
    "NoiseVariant",
    "CorruptionSpec",
    # Streams
    "StreamPurpose",
    "make_stream",
    # Instance
    "Instance",
    "sample_instance",
    "sample_decision_set",
    "unit_rows",
    # Noise
    "sample_noise",
    "sample_noise_batch",
    "empirical_moment",
    # Adversary
    "AdversaryState",
    "apply_corruption",
    # Regret
    "regret_increment",
    # Simulator
    "BanditEnvironment",
    "Feedback",
]
