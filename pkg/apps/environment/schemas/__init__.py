"""Environment schemas package."""

from .noise_schema import CorruptionSpec, NoiseModel, NoiseVariant

__all__ = [
    "NoiseModel",
    "NoiseVariant",
    "CorruptionSpec",
]
