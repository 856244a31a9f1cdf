"""Unit tests for density inversion, truncation and ISE."""

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import integrate, stats

from hfnoise.core.exceptions import InvalidInputError, KernelSupportError
from hfnoise.modules.density import (
    default_x_grid,
    estimate_density,
    frequency_grid,
    invert_density,
    ise,
    robust_scale,
    truncate_negative,
)
from hfnoise.modules.density.schemas import DensityEstimate, KernelSpec
from hfnoise.modules.ecf.schemas import CharFnEstimate


def flat_charfn(s_grid):
    return CharFnEstimate(
        s_grid=s_grid, values=np.ones(len(s_grid)), xi=1.0, kind="error_fU1"
    )


def density(values, x_grid=None, truncated=False):
    if x_grid is None:
        x_grid = np.linspace(-1.0, 1.0, len(values))
    return DensityEstimate(
        x_grid=x_grid, values=values, kernel=KernelSpec(h=1.0), truncated=truncated
    )


class TestKernelSpec:
    """Test suite for KernelSpec."""

    def test_fourier_transforms(self):
        sinc = KernelSpec(family="sinc", h=1.0)
        gaussian = KernelSpec(family="gaussian", h=1.0)

        np.testing.assert_array_equal(sinc.fourier([0.0, 1.0, 1.5]), [1.0, 1.0, 0.0])
        assert gaussian.fourier(0.0) == 1.0
        assert gaussian.fourier(2.0) == pytest.approx(np.exp(-2.0))

    def test_support(self):
        assert KernelSpec(family="sinc", h=0.5).s_max == 2.0
        assert KernelSpec(family="gaussian", h=0.5).s_max == 16.0

    def test_rejects_non_positive_bandwidth(self):
        with pytest.raises(ValidationError):
            KernelSpec(h=0.0)


class TestFrequencyGrid:
    """Test suite for frequency_grid."""

    def test_half_line(self):
        s = frequency_grid(KernelSpec(h=0.25))

        assert s.size == 2048
        assert s[0] == 0.0
        assert s[-1] == 4.0

    def test_symmetric(self):
        s = frequency_grid(KernelSpec(h=1.0), n_points=5, symmetric=True)

        np.testing.assert_allclose(s, np.linspace(-1.0, 1.0, 9))


class TestInvertDensity:
    """Test suite for invert_density."""

    def test_flat_charfn_gaussian_kernel(self):
        kernel = KernelSpec(family="gaussian", h=1.0)
        estimate = invert_density(flat_charfn(frequency_grid(kernel)), kernel, [0.0])

        assert estimate.values[0] == pytest.approx(1.0 / np.sqrt(2.0 * np.pi), abs=1e-6)
        assert not estimate.truncated

    def test_flat_charfn_sinc_kernel(self):
        kernel = KernelSpec(family="sinc", h=1.0)
        x_grid = np.array([0.0, 0.5, 2.0])
        estimate = invert_density(flat_charfn(frequency_grid(kernel)), kernel, x_grid)

        assert estimate.values[0] == pytest.approx(1.0 / np.pi, abs=1e-6)
        np.testing.assert_allclose(
            estimate.values[1:], np.sin(x_grid[1:]) / (np.pi * x_grid[1:]), atol=1e-6
        )

    def test_normal_charfn_matches_adaptive_quadrature(self):
        kernel = KernelSpec(family="gaussian", h=0.7)
        s_grid = frequency_grid(kernel)
        charfn = CharFnEstimate(
            s_grid=s_grid, values=np.exp(-0.5 * s_grid**2), xi=1.0, kind="error_fU1"
        )
        x_grid = np.array([-2.0, -0.3, 0.0, 1.1, 3.0])
        estimate = invert_density(charfn, kernel, x_grid)

        for x, value in zip(x_grid, estimate.values):
            oracle, _ = integrate.quad(
                lambda s: np.cos(s * x) * np.exp(-0.5 * s**2 * (1.0 + 0.49)),
                0.0,
                kernel.s_max,
                epsabs=1e-13,
                limit=200,
            )
            assert value == pytest.approx(oracle / np.pi, abs=1e-8)
        np.testing.assert_allclose(
            estimate.values, stats.norm.pdf(x_grid, scale=np.sqrt(1.49)), atol=1e-8
        )

    def test_mass_before_truncation(self):
        kernel = KernelSpec(family="sinc", h=0.5)
        x_grid = np.linspace(-400.0, 400.0, 40001)
        estimate = invert_density(flat_charfn(frequency_grid(kernel)), kernel, x_grid)

        mass = integrate.trapezoid(estimate.values, x_grid)

        assert mass == pytest.approx(1.0, abs=1e-3)
        assert np.any(estimate.values < 0.0)

    def test_symmetric_in_x(self):
        kernel = KernelSpec(family="sinc", h=0.8)
        x_grid = np.linspace(-5.0, 5.0, 101)
        s_grid = frequency_grid(kernel)
        charfn = CharFnEstimate(
            s_grid=s_grid, values=np.exp(-np.abs(s_grid)), xi=1.0, kind="error_fU1"
        )
        values = invert_density(charfn, kernel, x_grid).values

        np.testing.assert_allclose(values, values[::-1], rtol=0.0, atol=1e-12)

    def test_symmetric_frequency_grid_is_folded(self):
        kernel = KernelSpec(family="gaussian", h=1.0)
        x_grid = np.linspace(-3.0, 3.0, 13)
        half = invert_density(flat_charfn(frequency_grid(kernel)), kernel, x_grid)
        full = invert_density(
            flat_charfn(frequency_grid(kernel, symmetric=True)), kernel, x_grid
        )

        np.testing.assert_allclose(half.values, full.values, atol=1e-14)

    def test_missing_origin_is_filled_with_one(self):
        kernel = KernelSpec(family="sinc", h=1.0)
        s_grid = np.linspace(1e-3, 1.0, 1000)
        estimate = invert_density(flat_charfn(s_grid), kernel, [0.0])

        assert estimate.values[0] == pytest.approx(1.0 / np.pi, abs=1e-6)

    def test_rejects_short_frequency_grid(self):
        kernel = KernelSpec(family="sinc", h=1.0)

        with pytest.raises(KernelSupportError):
            invert_density(flat_charfn(np.linspace(0.0, 0.5, 100)), kernel, [0.0])

    def test_rejects_difference_charfn(self):
        charfn = CharFnEstimate(
            s_grid=[0.0, 1.0], values=[1.0, 1.0], xi=1.0, kind="diff_fUtilde"
        )

        with pytest.raises(InvalidInputError):
            invert_density(charfn, KernelSpec(h=1.0), [0.0])


class TestTruncateNegative:
    """Test suite for truncate_negative."""

    def test_clamps_negative_values(self):
        truncated = truncate_negative(density([0.2, -0.3, 0.5]))

        np.testing.assert_array_equal(truncated.values, [0.2, 0.0, 0.5])
        assert truncated.truncated

    def test_non_negative_input_unchanged(self):
        original = density([0.1, 0.4, 0.1])

        truncated = truncate_negative(original)

        np.testing.assert_array_equal(truncated.values, original.values)

    def test_mass_gain_equals_negative_part(self):
        x_grid = np.linspace(-3.0, 3.0, 601)
        values = np.cos(2.0 * x_grid)
        original = density(values, x_grid)
        truncated = truncate_negative(original)
        gain = integrate.trapezoid(truncated.values, x_grid) - integrate.trapezoid(
            values, x_grid
        )

        assert gain >= 0.0
        assert gain == pytest.approx(
            -integrate.trapezoid(np.minimum(values, 0.0), x_grid), abs=1e-12
        )

    def test_truncated_density_rejects_negative_values(self):
        with pytest.raises(ValidationError):
            density([0.1, -0.1], truncated=True)


class TestIse:
    """Test suite for ise."""

    def test_zero_when_equal_to_truth(self):
        x_grid = np.linspace(-5.0, 5.0, 201)

        assert ise(density(stats.norm.pdf(x_grid), x_grid), stats.norm.pdf) == 0.0

    def test_zero_estimate_against_normal(self):
        x_grid = np.linspace(-10.0, 10.0, 4001)

        zero = density(np.zeros(x_grid.size), x_grid)

        assert ise(zero, stats.norm.pdf) == pytest.approx(0.28209479, abs=1e-4)

    def test_symmetric_in_argument_order(self):
        x_grid = np.linspace(-8.0, 8.0, 1601)

        def shifted(x):
            return stats.norm.pdf(x, loc=0.5)

        forward = ise(density(stats.norm.pdf(x_grid), x_grid), shifted)
        backward = ise(density(shifted(x_grid), x_grid), stats.norm.pdf)

        assert forward == pytest.approx(backward, rel=1e-12)


class TestDefaultXGrid:
    """Test suite for default_x_grid and robust_scale."""

    def test_spans_six_robust_scales(self, small_noisy_series):
        grid = default_x_grid(small_noisy_series)
        scale = robust_scale(np.diff(small_noisy_series.y) / np.sqrt(2.0))

        assert grid.size == 512
        assert grid[-1] == pytest.approx(6.0 * scale)
        assert grid[0] == pytest.approx(-6.0 * scale)

    def test_robust_scale_of_normal_sample(self, rng):
        sample = rng.normal(scale=3.0, size=50_000)

        assert robust_scale(sample) == pytest.approx(3.0, rel=0.03)

    def test_robust_scale_falls_back_to_std(self):
        values = np.array([0.0, 0.0, 0.0, 0.0, 1.0])

        assert robust_scale(values) == pytest.approx(np.std(values))

    def test_rejects_constant_series(self, constant_series):
        with pytest.raises(InvalidInputError):
            default_x_grid(constant_series)


class TestEstimateDensity:
    """Test suite for estimate_density."""

    def test_end_to_end_on_pure_noise(self, small_noisy_series):
        kernel = KernelSpec(family="gaussian", h=0.01)
        estimate = estimate_density(small_noisy_series, kernel, xi=0.01)

        assert estimate.truncated
        assert estimate.xi == 0.01
        assert np.all(estimate.values >= 0.0)
        assert abs(estimate.x_grid[np.argmax(estimate.values)]) < 0.01

    def test_untruncated_option(self, small_noisy_series):
        kernel = KernelSpec(family="sinc", h=0.02)
        estimate = estimate_density(small_noisy_series, kernel, xi=0.01, truncate=False)

        assert not estimate.truncated
