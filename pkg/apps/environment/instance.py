"""Problem instances and per-round decision sets."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from apps.core.errors import InvalidArgumentError
from apps.core.types import Mat, Vec

from .rng import StreamPurpose, make_stream


def unit_rows(rng: np.random.Generator, n: int, d: int) -> Mat:
    """``n`` independent uniform draws from the unit sphere in R^d."""
    g = rng.standard_normal((n, d))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    # A zero Gaussian draw has probability zero; redraw rather than divide by it.
    while np.any(norms == 0.0):
        bad = norms[:, 0] == 0.0
        g[bad] = rng.standard_normal((int(bad.sum()), d))
        norms = np.linalg.norm(g, axis=1, keepdims=True)
    return g / norms


@dataclass(frozen=True, slots=True)
class Instance:
    """Unknown parameter θ* on the unit sphere with L = S = 1."""

    theta_star: Vec
    d: int
    K: int
    seed: int
    L: float = 1.0
    S: float = 1.0


def sample_instance(seed: int, d: int, K: int) -> Instance:
    """θ* = g/‖g‖₂ from the seed's θ* stream."""
    if d < 1 or K < 1:
        raise InvalidArgumentError("d and K must be positive", {"d": d, "K": K})
    theta = unit_rows(make_stream(seed, StreamPurpose.THETA_STAR), 1, d)[0]
    return Instance(theta_star=theta, d=d, K=K, seed=seed)


def sample_decision_set(rng: np.random.Generator, d: int, K: int) -> Mat:
    """``K`` fresh independent unit vectors as a ``(K, d)`` array."""
    if d < 1 or K < 1:
        raise InvalidArgumentError("d and K must be positive", {"d": d, "K": K})
    return unit_rows(rng, K, d)
