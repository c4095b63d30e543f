"""Projection onto the Euclidean ball under an ellipsoidal norm.

Solves ``argmin_{||θ||₂ ≤ S} ||θ − θ̃||_V``. Outside the ball the minimizer is
``θ(μ) = (V + μI)⁻¹ V θ̃`` for the multiplier ``μ > 0`` with ``||θ(μ)||₂ = S``;
``||θ(μ)||₂`` is strictly decreasing in ``μ``, so the root is unique.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg as sla
from scipy import optimize

from apps.core.errors import InvalidArgumentError, NumericFailureError
from apps.core.types import Vec, as_vec

from .spd import SpdState

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
MAX_DOUBLINGS = 200
MAX_ROOT_ITERATIONS = 200
ROOT_RTOL = 4 * np.finfo(float).eps
# Absolute μ tolerance is this fraction of tol·λ, which keeps ||θ(μ)||₂ inside tol·S.
ROOT_XTOL_SCALE = 0.1


@dataclass(frozen=True, slots=True)
class BallProjection:
    """Projected point with the Lagrange multiplier and solver effort."""

    theta: Vec
    multiplier: float
    iterations: int


def shrink_path(state: SpdState, theta_tilde: Vec, mu: float) -> Vec:
    """``θ(μ) = (V + μI)⁻¹ V θ̃`` by a Cholesky solve."""
    shifted = state.V + mu * np.eye(state.dim)
    try:
        factor = sla.cho_factor(shifted, lower=True)
    except np.linalg.LinAlgError:
        raise NumericFailureError("shifted matrix is not positive definite", {"mu": mu})
    return sla.cho_solve(factor, state.V @ theta_tilde)


def solve_ball_projection(
    state: SpdState, theta_tilde: Vec, S: float, tol: float = DEFAULT_TOL
) -> BallProjection:
    """Project ``theta_tilde`` and report the multiplier (0 for interior points).

    The multiplier is bracketed by doubling from λ, then ``||θ(μ)||₂ = S`` is
    solved with Brent's method on the bracket.
    """
    if not S > 0:
        raise InvalidArgumentError("radius S must be positive", {"S": S})
    if not tol > 0:
        raise InvalidArgumentError("tol must be positive", {"tol": tol})
    theta_tilde = as_vec(theta_tilde, state.dim, "theta_tilde")
    outside = float(np.linalg.norm(theta_tilde)) - S
    if outside <= 0:
        return BallProjection(theta=theta_tilde.copy(), multiplier=0.0, iterations=0)

    band = tol * S
    mu_hi = state.floor
    for doubling in range(MAX_DOUBLINGS):
        theta_hi = shrink_path(state, theta_tilde, mu_hi)
        norm_hi = float(np.linalg.norm(theta_hi))
        if abs(norm_hi - S) <= band:
            return BallProjection(theta=theta_hi, multiplier=mu_hi, iterations=doubling + 1)
        if norm_hi < S:
            break
        mu_hi *= 2.0
    else:
        raise NumericFailureError(
            "could not bracket the projection multiplier",
            {"doublings": MAX_DOUBLINGS, "S": S},
        )

    def excess(mu: float) -> float:
        if mu == 0.0:
            return outside
        return float(np.linalg.norm(shrink_path(state, theta_tilde, mu))) - S

    mu_lo = 0.0 if doubling == 0 else 0.5 * mu_hi
    try:
        mu, root = optimize.brentq(
            excess,
            mu_lo,
            mu_hi,
            xtol=ROOT_XTOL_SCALE * tol * state.floor,
            rtol=ROOT_RTOL,
            maxiter=MAX_ROOT_ITERATIONS,
            full_output=True,
            disp=False,
        )
    except ValueError as exc:
        raise NumericFailureError("projection root search failed", {"reason": str(exc), "S": S})

    iterations = doubling + 1 + root.function_calls
    theta = shrink_path(state, theta_tilde, mu)
    gap = float(np.linalg.norm(theta)) - S
    if abs(gap) > band:
        # Solve noise on ill-conditioned V; the point is pulled back onto the sphere.
        logger.warning(
            "projection missed the tolerance band (gap %.3g, band %.3g, converged=%s)", gap, band, root.converged
        )
        if gap > 0:
            theta = theta * (S / (S + gap))
    logger.debug("projection converged in %d solves", iterations)
    return BallProjection(theta=theta, multiplier=mu, iterations=iterations)


def project_ball_ellipsoid(
    state: SpdState, theta_tilde: Vec, S: float, tol: float = DEFAULT_TOL
) -> Vec:
    """Minimizer of ``||θ − theta_tilde||_V`` over ``||θ||₂ ≤ S``."""
    return solve_ball_projection(state, theta_tilde, S, tol).theta
