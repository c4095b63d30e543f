"""Regret and runtime line charts rendered to SVG with matplotlib."""

from __future__ import annotations

from pathlib import Path

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from .schemas import AlgoAggregate, SuiteSummary

# Fixed so that rerunning a suite reproduces the SVG byte for byte.
SVG_HASHSALT = "crhvt-bench"


def _line_chart(aggregates: list[AlgoAggregate], field: str, ylabel: str, scale: float = 1.0) -> Figure:
    fig = Figure(figsize=(6.4, 4.0))
    ax = fig.add_subplot()
    for aggregate in aggregates:
        values = np.asarray(getattr(aggregate, field), dtype=np.float64) * scale
        if values.size == 0:
            continue
        rounds = np.arange(1, values.size + 1)
        ax.plot(rounds, values, label=aggregate.algo, linewidth=1.2)
        if field == "mean_cum_regret":
            spread = np.asarray(aggregate.std_cum_regret)
            ax.fill_between(rounds, values - spread, values + spread, alpha=0.2)
    ax.set_xlabel("round")
    ax.set_ylabel(ylabel)
    ax.grid(True, linewidth=0.3)
    if ax.get_legend_handles_labels()[0]:
        ax.legend(loc="upper left")
    fig.tight_layout()
    return fig


def _save(fig: Figure, path: Path) -> Path:
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASHSALT, "svg.fonttype": "path"}):
        fig.savefig(path, format="svg", metadata={"Date": None})
    return path


def write_charts(summary: SuiteSummary, out_dir: Path) -> list[Path]:
    """``regret.svg`` (mean ± std cumulative regret) and ``runtime.svg`` (mean µs per round)."""
    regret = _line_chart(summary.aggregates, "mean_cum_regret", "cumulative regret")
    runtime = _line_chart(summary.aggregates, "mean_time_ns", "policy time per round (µs)", scale=1e-3)
    return [_save(regret, out_dir / "regret.svg"), _save(runtime, out_dir / "runtime.svg")]
