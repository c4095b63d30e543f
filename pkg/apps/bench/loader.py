"""Experiment config loading with command-line overrides."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from apps.core.errors import ConfigError

from .schemas import ExperimentConfig


def read_config_file(path: Path) -> dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}", {"reason": str(exc)})
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON", {"line": exc.lineno, "column": exc.colno})
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must hold a JSON object")
    return data


def load_experiment(
    path: Path | None = None,
    *,
    algos: list[str] | None = None,
    T: int | None = None,
    C: float | None = None,
    noise: str | None = None,
    seeds: list[int] | None = None,
    out: Path | None = None,
    plot: bool = False,
) -> ExperimentConfig:
    """Parse the JSON file (if any), apply the overrides and validate once."""
    data = read_config_file(path) if path is not None else {}
    if algos:
        data.pop("algo", None)
        data["algos"] = algos
    if T is not None:
        data["T"] = T
    if C is not None:
        data["corruption"] = {**data.get("corruption", {}), "budget": C}
    if noise is not None:
        data["noise"] = {**data.get("noise", {}), "variant": noise}
    if seeds:
        data["seeds"] = seeds
    if out is not None:
        data["output_dir"] = str(out)
    if plot:
        data["plot"] = True
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError("experiment config is invalid", {"errors": exc.errors(include_url=False)})
