"""Experiment configuration schemas."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, field_validator, model_validator

from apps.environment import CorruptionSpec, NoiseModel
from apps.estimator import KappaVariant
from apps.policies import PolicyName

ParamModeName = Literal["known", "unknown_C", "unknown_nu", "unknown_both"]


class ParamMode(BaseModel):
    """Which of (C, ν_t) the learner knows; unknown ones are replaced by bounds."""

    model_config = ConfigDict(frozen=True)

    mode: ParamModeName = "known"
    c_bar: float | None = Field(None, ge=0, description="Upper bound on C")
    nu: float | None = Field(None, gt=0, description="Global moment bound (defaults to the declared one)")

    @model_validator(mode="after")
    def _bounds_present(self) -> ParamMode:
        if self.mode in ("unknown_C", "unknown_both") and self.c_bar is None:
            raise ValueError(f"param_mode {self.mode} requires c_bar")
        return self

    @property
    def replaces_budget(self) -> bool:
        return self.mode in ("unknown_C", "unknown_both")

    @property
    def replaces_nu(self) -> bool:
        return self.mode in ("unknown_nu", "unknown_both")


class ScheduleOverrides(BaseModel):
    """Optional replacements for the default schedule constants."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    alpha: float | None = Field(None, gt=0)
    lam: float | None = Field(None, gt=0, alias="lambda")
    sigma_min: float | None = Field(None, gt=0)
    delta: float | None = Field(None, gt=0, lt=0.25)
    kappa_variant: KappaVariant | None = None


class ExperimentConfig(BaseModel):
    """One benchmark suite: algorithms × seeds on a shared environment spec."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    algos: list[PolicyName] = Field(
        default_factory=lambda: ["crhvt"],
        min_length=1,
        validation_alias=AliasChoices("algos", "algo"),
    )
    T: int = Field(5000, ge=1)
    d: int = Field(10, ge=1)
    K: int = Field(20, ge=1)
    noise: NoiseModel = Field(default_factory=NoiseModel)
    corruption: CorruptionSpec = Field(default_factory=CorruptionSpec)
    param_mode: ParamMode = Field(default_factory=ParamMode)
    seeds: list[int] = Field(default_factory=lambda: list(range(10)), min_length=1)
    overrides: ScheduleOverrides = Field(default_factory=ScheduleOverrides)
    context_seed: int | None = Field(None, ge=0, lt=2**64)
    output_dir: Path | None = None
    plot: bool = False

    @field_validator("algos", mode="before")
    @classmethod
    def _single_algo(cls, value):
        return [value] if isinstance(value, str) else value

    @field_validator("seeds")
    @classmethod
    def _seed_range(cls, value: list[int]) -> list[int]:
        if any(s < 0 or s >= 2**64 for s in value):
            raise ValueError("seeds must be 64-bit unsigned integers")
        return value

    def echo(self) -> dict:
        """JSON-ready copy for provenance in the summary."""
        return self.model_dump(mode="json", by_alias=True, exclude={"output_dir", "plot"})
