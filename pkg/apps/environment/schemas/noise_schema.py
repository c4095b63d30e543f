"""Noise and corruption schemas."""

from __future__ import annotations

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

NoiseVariant = Literal["student_t", "centered_pareto", "gaussian", "none"]


class NoiseModel(BaseModel):
    """Zero-mean noise distribution and the (ε, ν) pair declared to the learner.

    ``epsilon`` and ``nu`` default to closed forms per variant and may be
    overridden. ``nu_schedule``, when given, supplies ν_t round by round.
    """

    model_config = ConfigDict(frozen=True)

    variant: NoiseVariant = "student_t"
    df: float = Field(3.0, gt=2, description="Student-t degrees of freedom")
    shape: float = Field(1.5, gt=1, description="Pareto shape")
    x_min: float = Field(1.0, gt=0, description="Pareto scale")
    sd: float = Field(1.0, gt=0, description="Gaussian standard deviation")
    epsilon: float | None = Field(None, gt=0, le=1)
    nu: float | None = Field(None, gt=0)
    nu_schedule: list[float] | None = None

    @model_validator(mode="after")
    def _check_moments(self) -> NoiseModel:
        if self.variant == "centered_pareto" and self.nu is None:
            if self.shape <= 1.0 + self.declared_epsilon:
                raise ValueError("Pareto shape must exceed 1+epsilon for a finite moment")
        if self.nu_schedule is not None and any(v <= 0 for v in self.nu_schedule):
            raise ValueError("nu_schedule entries must be positive")
        return self

    @property
    def declared_epsilon(self) -> float:
        if self.epsilon is not None:
            return self.epsilon
        return 0.4 if self.variant == "centered_pareto" else 1.0

    @property
    def declared_nu(self) -> float:
        """Global moment bound ν reported to the learner."""
        if self.nu is not None:
            return self.nu
        match self.variant:
            case "student_t":
                return math.sqrt(self.df / (self.df - 2.0))
            case "centered_pareto":
                # (E[X^{1+ε}])^{1/(1+ε)} of the uncentered Pareto variable.
                p = 1.0 + self.declared_epsilon
                return (self.shape * self.x_min**p / (self.shape - p)) ** (1.0 / p)
            case "gaussian":
                return self.sd
            case _:
                return 1.0

    @property
    def mean_shift(self) -> float:
        """Population mean removed from the raw Pareto draw."""
        return self.shape * self.x_min / (self.shape - 1.0)

    def nu_at(self, t: int) -> float:
        """ν_t for 1-based round ``t``."""
        if self.nu_schedule:
            return self.nu_schedule[min(t, len(self.nu_schedule)) - 1]
        return self.declared_nu


class CorruptionSpec(BaseModel):
    """Adversary configuration."""

    model_config = ConfigDict(frozen=True)

    variant: Literal["theta_flip", "none"] = "theta_flip"
    budget: float = Field(0.0, ge=0, description="Total corruption budget C")
