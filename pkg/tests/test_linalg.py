"""Tests for the SPD state, Mahalanobis norms and the ball projection."""

import numpy as np
import pytest

from apps.core.errors import InvalidArgumentError, NumericFailureError
from apps.linalg import (
    REFRESH_INTERVAL,
    SpdState,
    invert_spd,
    mahalanobis_norm,
    mahalanobis_norms,
    project_ball_ellipsoid,
    rank_one_update,
    shrink_path,
    solve_ball_projection,
    spd_init,
)


def diag_state(*entries):
    V = np.diag(np.asarray(entries, dtype=float))
    return SpdState(V=V, Vinv=np.linalg.inv(V), floor=float(min(entries)))


class TestSpdInit:
    """Test SPD initialization."""

    def test_identity(self):
        """Test λ=1, d=2 gives identity matrices."""
        state = spd_init(1.0, 2)
        assert np.array_equal(state.V, np.eye(2))
        assert np.array_equal(state.Vinv, np.eye(2))

    def test_theorem_choice(self):
        """Test λ=d=10 gives 10·I."""
        assert np.array_equal(spd_init(10.0, 10).V, 10.0 * np.eye(10))

    def test_diagonal_inverse(self):
        """Test λ=0.5 gives Vinv = 2·I."""
        assert np.allclose(spd_init(0.5, 3).Vinv, 2.0 * np.eye(3))

    @pytest.mark.parametrize("lam, d", [(0.0, 2), (-1.0, 2), (1.0, 0)])
    def test_rejects_bad_arguments(self, lam, d):
        """Test non-positive λ or d is an invalid argument."""
        with pytest.raises(InvalidArgumentError):
            spd_init(lam, d)


class TestRankOneUpdate:
    """Test the maintained inverse."""

    def test_axis_aligned_update(self):
        """Test V=I, x=(1,0) gives diag(2,1) and its inverse."""
        state = rank_one_update(spd_init(1.0, 2), np.array([1.0, 0.0]), 1.0)
        assert np.allclose(state.V, np.diag([2.0, 1.0]))
        assert np.allclose(state.Vinv, np.diag([0.5, 1.0]))

    def test_zero_vector_is_noop(self):
        """Test a zero vector leaves the state unchanged."""
        state = spd_init(1.0, 2)
        assert rank_one_update(state, np.zeros(2), 1.0) is state

    def test_matches_direct_inverse(self, rng):
        """Test 1000 random updates stay within 1e-8 of a from-scratch inverse."""
        state = spd_init(1.0, 10)
        for _ in range(1000):
            x = rng.standard_normal(10)
            state = rank_one_update(state, x / np.linalg.norm(x), float(rng.uniform(0.1, 10.0)))
            assert np.max(np.abs(state.Vinv - np.linalg.inv(state.V))) <= 1e-8

    def test_refresh_resets_counter(self, rng):
        """Test the inverse is rebuilt from V after the refresh interval."""
        state = spd_init(1.0, 3)
        for _ in range(REFRESH_INTERVAL - 1):
            state = rank_one_update(state, rng.standard_normal(3), 1.0)
        assert state.pending == REFRESH_INTERVAL - 1
        state = rank_one_update(state, rng.standard_normal(3), 1.0)
        assert state.pending == 0
        assert state.sync_error() <= 1e-10

    def test_wide_weight_range_stays_synced(self, rng):
        """Test weights spanning 1e-4..1e4 keep V·Vinv close to identity."""
        state = spd_init(1.0, 8)
        for _ in range(1500):
            x = rng.standard_normal(8)
            state = rank_one_update(state, x / np.linalg.norm(x), 10.0 ** rng.uniform(-4, 4))
        assert state.sync_error() <= 1e-8

    def test_dimension_mismatch(self):
        """Test a wrong-length vector is an invalid argument."""
        with pytest.raises(InvalidArgumentError):
            rank_one_update(spd_init(1.0, 2), np.ones(3), 1.0)

    def test_non_positive_weight(self):
        """Test weight must be positive."""
        with pytest.raises(InvalidArgumentError):
            rank_one_update(spd_init(1.0, 2), np.ones(2), 0.0)

    def test_invert_rejects_indefinite(self):
        """Test inverting an indefinite matrix is a numeric failure."""
        with pytest.raises(NumericFailureError):
            invert_spd(np.diag([1.0, -1.0]))


class TestMahalanobisNorm:
    """Test weighted norms."""

    @pytest.mark.parametrize("metric", ["V", "Vinv"])
    def test_euclidean_case(self, metric):
        """Test V=I, x=(3,4) gives 5 under either metric."""
        assert mahalanobis_norm(spd_init(1.0, 2), np.array([3.0, 4.0]), metric) == pytest.approx(5.0)

    def test_diagonal_cases(self):
        """Test V=diag(4,1), x=(1,0) gives 2 in V and 0.5 in Vinv."""
        state = diag_state(4.0, 1.0)
        x = np.array([1.0, 0.0])
        assert mahalanobis_norm(state, x, "V") == pytest.approx(2.0)
        assert mahalanobis_norm(state, x, "Vinv") == pytest.approx(0.5)

    def test_small_negative_radicand_clamps(self):
        """Test rounding-level negative radicands clamp to zero."""
        state = SpdState(V=np.eye(1), Vinv=np.array([[-1e-13]]), floor=1.0)
        assert mahalanobis_norm(state, np.array([1.0])) == 0.0

    def test_large_negative_radicand_fails(self):
        """Test a clearly negative quadratic form is a numeric failure."""
        state = SpdState(V=np.eye(1), Vinv=np.array([[-1e-6]]), floor=1.0)
        with pytest.raises(NumericFailureError):
            mahalanobis_norm(state, np.array([1.0]))

    def test_rowwise_matches_scalar(self, rng):
        """Test the batched norms agree with the scalar routine."""
        state = spd_init(2.0, 4)
        for _ in range(5):
            state = rank_one_update(state, rng.standard_normal(4), 1.0)
        X = rng.standard_normal((6, 4))
        expected = [mahalanobis_norm(state, x) for x in X]
        assert np.allclose(mahalanobis_norms(state, X), expected)


    def test_norm_duality(self, rng):
        """Test ‖x‖_V·‖x‖_{V⁻¹} ≥ ‖x‖² on random states and vectors."""
        state = spd_init(0.5, 6)
        for _ in range(25):
            state = rank_one_update(state, rng.standard_normal(6), float(rng.uniform(0.1, 10.0)))
        for x in rng.standard_normal((500, 6)):
            product = mahalanobis_norm(state, x, "V") * mahalanobis_norm(state, x, "Vinv")
            assert product >= float(x @ x) * (1.0 - 1e-12)


class TestBallProjection:
    """Test projection onto the S-ball in the V-metric."""

    def test_interior_point_unchanged(self):
        """Test a point with norm 0.5 is returned unchanged."""
        theta = np.array([0.3, 0.4])
        result = solve_ball_projection(spd_init(1.0, 2), theta, 1.0)
        assert np.array_equal(result.theta, theta)
        assert result.multiplier == 0.0

    def test_euclidean_radial(self):
        """Test V=I projects (3,4) to (0.6,0.8)."""
        theta = project_ball_ellipsoid(spd_init(1.0, 2), np.array([3.0, 4.0]), 1.0)
        assert np.allclose(theta, [0.6, 0.8], atol=1e-8)

    def test_matches_grid_search(self):
        """Test V=diag(100,1), θ̃=(2,2) against a dense grid over the unit disk."""
        state = diag_state(100.0, 1.0)
        target = np.array([2.0, 2.0])
        theta = project_ball_ellipsoid(state, target, 1.0)

        grid = np.arange(-1.0, 1.0 + 1e-3, 1e-3)
        a, b = np.meshgrid(grid, grid, indexing="ij")
        inside = a * a + b * b <= 1.0
        cost = 100.0 * (a - 2.0) ** 2 + (b - 2.0) ** 2
        cost[~inside] = np.inf
        i, j = np.unravel_index(np.argmin(cost), cost.shape)
        assert abs(theta[0] - grid[i]) <= 2e-3
        assert abs(theta[1] - grid[j]) <= 2e-3

    def test_kkt_conditions(self, rng):
        """Test feasibility, stationarity and complementary slackness."""
        state = spd_init(1.0, 5)
        for _ in range(15):
            state = rank_one_update(state, rng.standard_normal(5), float(rng.uniform(0.1, 5.0)))
        target = rng.standard_normal(5) * 4.0 + 3.0
        result = solve_ball_projection(state, target, 1.0)
        assert np.linalg.norm(result.theta) <= 1.0 + 1e-9
        residual = state.V @ (result.theta - target) + result.multiplier * result.theta
        assert np.linalg.norm(residual) <= 1e-8 * np.linalg.norm(state.V @ target)
        assert result.multiplier > 0
        assert abs(np.linalg.norm(result.theta) - 1.0) <= 1e-9

    def test_idempotent(self, rng):
        """Test projecting a projected point changes nothing material."""
        state = rank_one_update(spd_init(1.0, 3), np.array([1.0, 2.0, 0.5]), 3.0)
        once = project_ball_ellipsoid(state, np.array([5.0, -2.0, 1.0]), 1.0)
        twice = project_ball_ellipsoid(state, once, 1.0)
        assert np.allclose(once, twice, atol=1e-9)

    def test_rejects_non_positive_radius(self):
        """Test S must be positive."""
        with pytest.raises(InvalidArgumentError):
            solve_ball_projection(spd_init(1.0, 2), np.ones(2), 0.0)

    def test_shrink_path_norm_decreases(self, rng):
        """Test ‖θ(μ)‖₂ strictly decreases along increasing μ."""
        state = spd_init(1.0, 4)
        for _ in range(12):
            state = rank_one_update(state, rng.standard_normal(4), float(rng.uniform(0.1, 5.0)))
        target = rng.standard_normal(4) * 5.0
        norms = [np.linalg.norm(shrink_path(state, target, mu)) for mu in np.geomspace(1e-3, 1e3, 40)]
        assert np.all(np.diff(norms) < 0)

    def test_multiplier_within_band(self, rng):
        """Test the returned point sits on the sphere to tol·S and reports its solves."""
        state = spd_init(2.0, 5)
        for _ in range(10):
            state = rank_one_update(state, rng.standard_normal(5), float(rng.uniform(0.1, 5.0)))
        result = solve_ball_projection(state, rng.standard_normal(5) * 10.0, 2.0, tol=1e-10)
        assert abs(np.linalg.norm(result.theta) - 2.0) <= 2e-10
        assert result.iterations >= 1
