"""Per-round record written to the run CSVs."""

from __future__ import annotations

from dataclasses import astuple, dataclass

CSV_COLUMNS: tuple[str, ...] = (
    "round",
    "instant_regret",
    "cum_regret",
    "per_round_time_ns",
    "sigma_t",
    "w_t",
    "tau_t",
    "beta_t",
    "active_sigma_branch",
    "c_t_applied",
)


@dataclass(frozen=True, slots=True)
class RoundRecord:
    """One row of ``run_<algo>_<seed>.csv``.

    Diagnostic fields are ``None`` for policies that do not track them and
    are written as empty cells.
    """

    round: int
    instant_regret: float
    cum_regret: float
    per_round_time_ns: int
    sigma_t: float | None
    w_t: float | None
    tau_t: float | None
    beta_t: float | None
    active_sigma_branch: str | None
    c_t_applied: float

    def as_row(self) -> list[object]:
        return ["" if value is None else value for value in astuple(self)]
