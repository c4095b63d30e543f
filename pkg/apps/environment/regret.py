"""Regret accounting on noise-free, uncorrupted mean rewards."""

from __future__ import annotations

import numpy as np

from apps.core.types import Mat, Vec


def regret_increment(decision_set: Mat, chosen_index: int, theta_star: Vec) -> float:
    """``max_x ⟨x, θ*⟩ − ⟨x_chosen, θ*⟩``, never negative."""
    means = np.asarray(decision_set) @ theta_star
    return max(0.0, float(means.max() - means[chosen_index]))
