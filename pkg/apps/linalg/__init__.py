"""Small dense linear algebra: SPD state, Mahalanobis norms, ball projection."""

from .projection import (
    DEFAULT_TOL,
    BallProjection,
    project_ball_ellipsoid,
    shrink_path,
    solve_ball_projection,
)
from .spd import (
    REFRESH_INTERVAL,
    Metric,
    SpdState,
    invert_spd,
    mahalanobis_norm,
    mahalanobis_norms,
    rank_one_update,
    spd_init,
)

__all__ = [
    # SPD state
    "SpdState",
    "Metric",
    "REFRESH_INTERVAL",
    "spd_init",
    "rank_one_update",
    "invert_spd",
    "mahalanobis_norm",
    "mahalanobis_norms",
    # Projection
    "BallProjection",
    "DEFAULT_TOL",
    "project_ball_ellipsoid",
    "solve_ball_projection",
    "shrink_path",
]
