"""Suite summary schemas (the ``summary.json`` contract)."""

from __future__ import annotations

from pydantic import BaseModel, Field


class InvariantCheck(BaseModel):
    """One pass/fail property check."""

    algo: str
    seed: int | None = None
    name: str
    value: float
    bound: float
    passed: bool
    note: str | None = None


class NoiseMoment(BaseModel):
    """Empirical E|η|^{1+ε} of one run's noise draws, next to the declared ν^{1+ε}."""

    seed: int
    order: float
    empirical: float
    declared: float
    draws: int


class RunFailure(BaseModel):
    """A run that stopped early."""

    algo: str
    seed: int
    round: int | None = None
    code: str
    message: str


class AlgoAggregate(BaseModel):
    """Per-round mean and standard deviation across successful seeds."""

    algo: str
    seeds: list[int] = Field(default_factory=list)
    final_regret: list[float] = Field(default_factory=list)
    mean_cum_regret: list[float] = Field(default_factory=list)
    std_cum_regret: list[float] = Field(default_factory=list)
    # Timing fields; excluded from determinism comparisons.
    mean_time_ns: list[float] = Field(default_factory=list)
    std_time_ns: list[float] = Field(default_factory=list)
    total_policy_time_ns: list[int] = Field(default_factory=list)


TIMING_FIELDS = frozenset({"mean_time_ns", "std_time_ns", "total_policy_time_ns"})


class SuiteSummary(BaseModel):
    """Everything written to ``summary.json``."""

    config: dict = Field(default_factory=dict)
    aggregates: list[AlgoAggregate] = Field(default_factory=list)
    failures: list[RunFailure] = Field(default_factory=list)
    invariants: list[InvariantCheck] = Field(default_factory=list)
    noise_moments: list[NoiseMoment] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and all(check.passed for check in self.invariants)

    def without_timing(self) -> dict:
        """Summary dict with timing arrays removed."""
        data = self.model_dump(mode="json")
        for aggregate in data["aggregates"]:
            for name in TIMING_FIELDS:
                aggregate.pop(name, None)
        return data
