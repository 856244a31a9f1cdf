"""Unit tests for noise moment estimation."""

import numpy as np
import pytest
from pydantic import ValidationError

from hfnoise.core.exceptions import EmptyNeighborhoodError, InvalidInputError
from hfnoise.modules.ecf import build_neighborhoods
from hfnoise.modules.ecf.schemas import NeighborhoodIndex
from hfnoise.modules.moments import (
    convolve_moments,
    estimate_moments,
    mtilde_moments,
    recover_moments,
)
from hfnoise.modules.moments.schemas import MomentSet
from hfnoise.modules.volatility import realized_volatility
from tests.fixtures.series_examples import noise_only_series, series_from


class TestMtildeMoments:
    """Test suite for mtilde_moments."""

    def test_three_point_series(self, three_points):
        nbhd = build_neighborhoods(three_points.grid, 1.5)

        assert mtilde_moments(three_points, nbhd, 2) == [1.0, 1.0]

    def test_constant_series(self, constant_series):
        nbhd = build_neighborhoods(constant_series.grid, 4.0)

        assert mtilde_moments(constant_series, nbhd, 3) == [0.0, 0.0, 0.0]

    def test_standard_normal_noise(self):
        series = noise_only_series(n=10_000, sigma_u=1.0, seed=17)
        nbhd = build_neighborhoods(series.grid, series.times[1])
        m2, m4 = mtilde_moments(series, nbhd, 2)

        assert m2 == pytest.approx(2.0, abs=0.15)
        assert m4 == pytest.approx(12.0, abs=2.0)

    def test_rejects_order_above_cap(self, three_points):
        nbhd = build_neighborhoods(three_points.grid, 1.5)

        with pytest.raises(InvalidInputError):
            mtilde_moments(three_points, nbhd, 9)

    def test_rejects_empty_index(self, three_points):
        nbhd = NeighborhoodIndex(pairs=[], counts=[0, 0, 0], total=0, xi=1.0)

        with pytest.raises(EmptyNeighborhoodError):
            mtilde_moments(three_points, nbhd, 1)


class TestRecoverMoments:
    """Test suite for recover_moments and convolve_moments."""

    def test_standard_normal_moments(self):
        assert recover_moments([2.0, 12.0]) == pytest.approx([1.0, 3.0])

    def test_zero_moments(self):
        assert recover_moments([0.0, 0.0]) == [0.0, 0.0]

    def test_first_moment_is_halved(self):
        assert recover_moments([0.37])[0] == 0.185

    def test_round_trip(self, rng):
        orders = np.arange(1, 9)
        double_factorials = np.cumprod(2 * orders - 1)
        for _ in range(20):
            weight = rng.uniform()
            scales = rng.uniform(0.5, 2.0, size=2)
            # moments of a two-component normal mixture
            powers = scales[:, None] ** (2 * orders)
            mixture = weight * powers[0] + (1 - weight) * powers[1]
            m_u = list(double_factorials * mixture)

            assert recover_moments(convolve_moments(m_u)) == pytest.approx(
                m_u, rel=1e-12
            )

    def test_scaling(self):
        m_tilde = [2.0, 13.0, 170.0]
        scaled = [value * 2.0 ** (2 * k) for k, value in enumerate(m_tilde, 1)]
        recovered = recover_moments(m_tilde)
        expected = [value * 2.0 ** (2 * k) for k, value in enumerate(recovered, 1)]

        assert recover_moments(scaled) == expected

    def test_negative_values_pass_through(self):
        assert recover_moments([1.0, 1.0]) == [0.5, -0.25]

    def test_rejects_empty_input(self):
        with pytest.raises(InvalidInputError):
            recover_moments([])


class TestEstimateMoments:
    """Test suite for estimate_moments."""

    def test_default_window_is_first_spacing(self, small_noisy_series):
        result = estimate_moments(small_noisy_series)

        assert result.xi == pytest.approx(small_noisy_series.times[1])
        assert result.kmax == 2
        assert result.m_tilde[0] == 2.0 * result.m_u[0]

    def test_agrees_with_first_difference_variance(self, small_noisy_series):
        result = estimate_moments(small_noisy_series, kmax=1)
        classical = realized_volatility(small_noisy_series) / (2 * small_noisy_series.n)

        assert result.variance == pytest.approx(classical, rel=1e-12)

    def test_recovers_noise_variance(self):
        series = noise_only_series(n=20_000, sigma_u=0.002, seed=8)
        result = estimate_moments(series)

        assert result.m_u[0] == pytest.approx(0.002**2, rel=0.05)
        assert result.m_u[1] == pytest.approx(3 * 0.002**4, rel=0.25)

    def test_rejects_single_observation(self):
        with pytest.raises(InvalidInputError):
            estimate_moments(series_from([0.0], [1.0]))


class TestMomentSet:
    """Test suite for MomentSet schema."""

    def test_rejects_broken_half_relation(self):
        with pytest.raises(ValidationError):
            MomentSet(xi=1.0, m_tilde=[2.0], m_u=[0.9])

    def test_rejects_negative_difference_moment(self):
        with pytest.raises(ValidationError):
            MomentSet(xi=1.0, m_tilde=[2.0, -1.0], m_u=[1.0, -3.5])

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValidationError):
            MomentSet(xi=1.0, m_tilde=[2.0, 12.0], m_u=[1.0])
