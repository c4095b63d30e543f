"""Pytest configuration and fixtures."""

import numpy as np
import pytest

from apps.bench import ExperimentConfig
from apps.estimator import ScheduleParams


@pytest.fixture
def rng():
    """A fixed-seed generator for ad-hoc random inputs."""
    return np.random.default_rng(20240601)


@pytest.fixture
def params():
    """Theorem-regime schedule at the published desk scale."""
    return ScheduleParams.theorem_defaults(T=5000, d=10, epsilon=1.0, nu=3**0.5)


@pytest.fixture
def small_params():
    """Small schedule for fast policy tests."""
    return ScheduleParams.theorem_defaults(T=200, d=4, epsilon=1.0, nu=3**0.5, corruption_budget=5.0)


@pytest.fixture
def small_config():
    """Short Student-t suite with a corruption budget, two seeds."""
    return ExperimentConfig(
        algos=["crhvt", "oful"],
        T=40,
        d=4,
        K=5,
        noise={"variant": "student_t"},
        corruption={"variant": "theta_flip", "budget": 3.0},
        seeds=[1, 2],
    )


@pytest.fixture
def config_file(tmp_path):
    """Write an experiment JSON file and return its path."""

    def write(**fields):
        import json

        data = {"algo": "crhvt", "T": 25, "d": 3, "K": 4, "seeds": [0], **fields}
        path = tmp_path / "exp.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return write
