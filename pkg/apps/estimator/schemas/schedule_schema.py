"""Schedule hyperparameter schema."""

from __future__ import annotations

import math
from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class MomentMode(StrEnum):
    """Where the (1+ε)-moment bound used by σ_t comes from."""

    PER_ROUND = "per_round"  # ν_t delivered by the environment each round
    GLOBAL_BOUND = "global_bound"  # a single known bound ν replaces every ν_t


class KappaVariant(StrEnum):
    """Denominator used inside κ."""

    ALGORITHM = "algorithm"  # σ_min² λ α d
    LEMMA = "lemma"  # 4 σ_min² λ d


class ScheduleParams(BaseModel):
    """Every scalar hyperparameter of the robust OMD schedule."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    T: int = Field(..., ge=1, description="Horizon")
    d: int = Field(..., ge=1, description="Feature dimension")
    epsilon: float = Field(..., gt=0, le=1, description="Moment order is 1+epsilon")
    L: float = Field(1.0, gt=0, description="Action norm bound")
    S: float = Field(1.0, gt=0, description="Parameter norm bound")
    delta: float = Field(..., gt=0, lt=0.25, description="Confidence level")
    lam: float = Field(..., gt=0, alias="lambda", description="Regularization")
    alpha: float = Field(8.0, gt=0, description="OMD step-size parameter")
    sigma_min: float = Field(..., gt=0)
    corruption_budget: float = Field(0.0, ge=0, description="C, or its upper bound C-bar")
    moment_mode: MomentMode = MomentMode.PER_ROUND
    nu: float | None = Field(None, gt=0, description="Global moment bound")
    kappa_variant: KappaVariant = KappaVariant.ALGORITHM

    @model_validator(mode="after")
    def _global_bound_needs_nu(self) -> ScheduleParams:
        if self.moment_mode is MomentMode.GLOBAL_BOUND and self.nu is None:
            raise ValueError("moment_mode=global_bound requires nu")
        return self

    @property
    def moment_exponent(self) -> float:
        """``(1−ε)/(2(1+ε))``, the power of t in β_t and τ_t."""
        return (1.0 - self.epsilon) / (2.0 * (1.0 + self.epsilon))

    @property
    def confidence_log(self) -> float:
        """``log(2T²/δ)``."""
        return math.log(2.0 * self.T * self.T / self.delta)

    @classmethod
    def theorem_defaults(cls, T: int, d: int, epsilon: float, **overrides: Any) -> ScheduleParams:
        """α = 8, λ = d, σ_min = 1/√T, δ = 1/(8T); keywords override any field."""
        values: dict[str, Any] = {
            "T": T,
            "d": d,
            "epsilon": epsilon,
            "alpha": 8.0,
            "lam": float(d),
            "sigma_min": 1.0 / math.sqrt(T),
            "delta": 1.0 / (8.0 * T),
        }
        if "lambda" in overrides:
            overrides["lam"] = overrides.pop("lambda")
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
