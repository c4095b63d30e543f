"""Zero-mean noise draws."""

from __future__ import annotations

import numpy as np

from .schemas import NoiseModel


def sample_noise(model: NoiseModel, rng: np.random.Generator) -> float:
    """One draw of η_t."""
    match model.variant:
        case "student_t":
            return float(rng.standard_t(model.df))
        case "centered_pareto":
            # numpy's pareto is the Lomax law; +1 and scaling give Pareto(shape, x_min).
            raw = (rng.pareto(model.shape) + 1.0) * model.x_min
            return float(raw - model.mean_shift)
        case "gaussian":
            return float(rng.normal(0.0, model.sd))
        case _:
            return 0.0


def sample_noise_batch(model: NoiseModel, rng: np.random.Generator, n: int) -> np.ndarray:
    """``n`` draws at once, for moment diagnostics."""
    match model.variant:
        case "student_t":
            return rng.standard_t(model.df, size=n)
        case "centered_pareto":
            return (rng.pareto(model.shape, size=n) + 1.0) * model.x_min - model.mean_shift
        case "gaussian":
            return rng.normal(0.0, model.sd, size=n)
        case _:
            return np.zeros(n)


def empirical_moment(samples: np.ndarray, order: float) -> float:
    """``mean(|η|^order)``, reported next to the declared ``ν^order``."""
    return float(np.mean(np.abs(samples) ** order))
