"""Tests for the Huber and pseudo-Huber losses."""

import math

import numpy as np
import pytest

from apps.core.errors import InvalidArgumentError
from apps.losses import (
    huber_deriv,
    huber_value,
    loss_gradient,
    pseudo_huber_deriv,
    pseudo_huber_value,
)


class TestHuber:
    """Test the Huber loss and its derivative."""

    @pytest.mark.parametrize("x, expected", [(0.0, 0.0), (1.0, 0.5), (3.0, 2.5), (-3.0, 2.5)])
    def test_values(self, x, expected):
        """Test quadratic and linear branches at τ=1."""
        assert huber_value(x, 1.0) == pytest.approx(expected)

    @pytest.mark.parametrize("x, expected", [(0.3, 0.3), (-5.0, -1.0), (1.0, 1.0)])
    def test_derivative_clips(self, x, expected):
        """Test the derivative is the residual clamped to [−τ, τ]."""
        assert huber_deriv(x, 1.0) == pytest.approx(expected)

    def test_scalar_returns_float(self):
        """Test scalar inputs give Python floats."""
        assert isinstance(huber_value(2.0, 1.0), float)
        assert isinstance(huber_deriv(2.0, 1.0), float)

    def test_array_input(self):
        """Test arrays are evaluated elementwise."""
        out = huber_value(np.array([0.0, 1.0, 3.0]), 1.0)
        assert np.allclose(out, [0.0, 0.5, 2.5])

    def test_convex_midpoint(self, rng):
        """Test the midpoint inequality on random triples."""
        a = rng.normal(0.0, 5.0, 10_000)
        b = rng.normal(0.0, 5.0, 10_000)
        tau = rng.uniform(0.1, 3.0, 10_000)
        mid = huber_value((a + b) / 2.0, tau)
        assert np.all(mid <= (huber_value(a, tau) + huber_value(b, tau)) / 2.0 + 1e-12)

    @pytest.mark.parametrize("tau", [0.0, -1.0])
    def test_rejects_non_positive_tau(self, tau):
        """Test τ must be positive."""
        with pytest.raises(InvalidArgumentError):
            huber_value(1.0, tau)


class TestLossGradient:
    """Test the σ-normalized round loss."""

    def test_zero_residual(self):
        """Test r = ⟨θ, x⟩ gives a zero gradient."""
        theta = np.array([0.2, -0.1])
        x = np.array([1.0, 2.0])
        result = loss_gradient(theta, x, float(theta @ x), 1.5, 1.0)
        assert np.allclose(result.gradient, 0.0)

    def test_clipped_branch(self):
        """Test θ=0, x=(1,0), r=10, σ=1, τ=2 gives z=10 and gradient (−2, 0)."""
        result = loss_gradient(np.zeros(2), np.array([1.0, 0.0]), 10.0, 1.0, 2.0)
        assert result.residual == pytest.approx(10.0)
        assert np.allclose(result.gradient, [-2.0, 0.0])

    def test_finite_differences(self, rng):
        """Test the gradient against central differences away from the kink."""
        checked = 0
        for _ in range(200):
            theta = rng.standard_normal(5)
            x = rng.standard_normal(5)
            r, sigma, tau = float(rng.normal(0, 3)), float(rng.uniform(0.2, 2)), float(rng.uniform(0.2, 3))
            result = loss_gradient(theta, x, r, sigma, tau)
            if abs(abs(result.residual) - tau) < 1e-3:
                continue
            numeric = np.array(
                [
                    (
                        loss_gradient(theta + 1e-6 * e, x, r, sigma, tau).value
                        - loss_gradient(theta - 1e-6 * e, x, r, sigma, tau).value
                    )
                    / 2e-6
                    for e in np.eye(5)
                ]
            )
            scale = max(1.0, np.linalg.norm(result.gradient))
            assert np.linalg.norm(numeric - result.gradient) / scale <= 1e-4
            checked += 1
        assert checked > 150

    def test_rejects_non_positive_sigma(self):
        """Test σ must be positive."""
        with pytest.raises(InvalidArgumentError):
            loss_gradient(np.zeros(2), np.ones(2), 1.0, 0.0, 1.0)


class TestPseudoHuber:
    """Test the smooth surrogate used by the re-solve baseline."""

    def test_zero(self):
        """Test φ(0) = 0."""
        assert pseudo_huber_value(0.0, 1.3) == 0.0

    def test_unit_value(self):
        """Test φ(1) at τ=1 is √2 − 1."""
        assert pseudo_huber_value(1.0, 1.0) == pytest.approx(math.sqrt(2.0) - 1.0)

    def test_linear_asymptote(self):
        """Test φ(x)/|x| tends to τ."""
        assert pseudo_huber_value(1e8, 1.0) / 1e8 == pytest.approx(1.0, rel=1e-6)

    def test_derivative_bounded(self, rng):
        """Test |φ'| stays below τ."""
        x = rng.normal(0.0, 100.0, 1000)
        assert np.all(np.abs(pseudo_huber_deriv(x, 2.0)) < 2.0)

    def test_small_argument_precision(self):
        """Test φ(x) ≈ x²/2 for tiny x without cancellation."""
        assert pseudo_huber_value(1e-9, 1.0) == pytest.approx(5e-19, rel=1e-6)


class TestHuberSymmetry:
    """Test scaling and symmetry of the Huber pair."""

    def test_derivative_scaling(self, rng):
        """Test f'_τ(x) = τ·f'₁(x/τ)."""
        x = rng.normal(0.0, 5.0, 1000)
        tau = rng.uniform(0.1, 3.0, 1000)
        assert np.allclose(huber_deriv(x, tau), tau * huber_deriv(x / tau, 1.0), rtol=1e-12, atol=0.0)

    def test_value_scaling(self, rng):
        """Test f_τ(x) = τ²·f₁(x/τ)."""
        x = rng.normal(0.0, 5.0, 1000)
        tau = rng.uniform(0.1, 3.0, 1000)
        assert np.allclose(huber_value(x, tau), tau**2 * huber_value(x / tau, 1.0), rtol=1e-12, atol=0.0)

    def test_symmetry(self, rng):
        """Test the value is even and the derivative is odd."""
        x = rng.normal(0.0, 5.0, 1000)
        assert np.array_equal(huber_value(-x, 1.5), huber_value(x, 1.5))
        assert np.array_equal(huber_deriv(-x, 1.5), -huber_deriv(x, 1.5))
