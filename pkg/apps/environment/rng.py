"""Seeded, independent random streams.

Each (seed, purpose) pair gets its own Philox counter-based generator, so the
decision-set stream of a run does not move when the noise model changes.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np


class StreamPurpose(IntEnum):
    THETA_STAR = 0
    DECISION_SETS = 1
    NOISE = 2
    MOMENTS = 3


def make_stream(seed: int, purpose: StreamPurpose) -> np.random.Generator:
    """Generator for one purpose of one run."""
    sequence = np.random.SeedSequence(entropy=int(seed) & (2**64 - 1), spawn_key=(int(purpose),))
    return np.random.Generator(np.random.Philox(sequence))
