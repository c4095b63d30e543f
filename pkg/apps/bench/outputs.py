"""CSV / JSON / SVG emission."""

from __future__ import annotations

import csv
import json
import logging
import tempfile
from collections.abc import Iterable
from pathlib import Path

from apps.core.errors import OutputError

from .schemas import CSV_COLUMNS, RoundRecord, SuiteSummary

logger = logging.getLogger(__name__)

SUMMARY_FILE = "summary.json"


def run_csv_name(algo: str, seed: int) -> str:
    return f"run_{algo}_{seed}.csv"


def prepare_output_dir(path: Path) -> Path:
    """Create ``path`` and prove it is writable; called before any run starts."""
    path = Path(path)
    try:
        path.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(dir=path, prefix=".writable-"):
            pass
    except OSError as exc:
        raise OutputError(f"output directory {path} is not writable", {"path": str(path), "reason": str(exc)})
    return path


def write_run_csv(path: Path, records: Iterable[RoundRecord]) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(record.as_row())


def read_run_csv(path: Path) -> list[dict[str, str]]:
    """Rows of a run CSV as strings keyed by column."""
    with path.open(encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))


def summary_json(summary: SuiteSummary) -> str:
    return json.dumps(summary.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"


def emit_outputs(summary: SuiteSummary, runs: Iterable, out_dir: Path, plot: bool = False) -> list[Path]:
    """Write one CSV per run (in the given order), ``summary.json`` and optional charts."""
    out_dir = prepare_output_dir(out_dir)
    written: list[Path] = []
    try:
        for run in runs:
            path = out_dir / run_csv_name(run.algo, run.seed)
            write_run_csv(path, run.records)
            written.append(path)
        path = out_dir / SUMMARY_FILE
        path.write_text(summary_json(summary), encoding="utf-8")
        written.append(path)
        if plot:
            from .plots import write_charts

            written.extend(write_charts(summary, out_dir))
    except OSError as exc:
        raise OutputError(f"failed writing outputs to {out_dir}", {"reason": str(exc)})
    logger.info("wrote %d file(s) to %s", len(written), out_dir)
    return written
