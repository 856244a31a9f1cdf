"""Desk-scale Monte Carlo acceptance runs.

Each test simulates 200 replications (20 for the bandwidth check) and takes
minutes. Set HFNOISE_WORKERS to spread replications over processes.
"""

import numpy as np
import pytest

from hfnoise.core.config import get_settings
from hfnoise.core.seeding import child_seed
from hfnoise.modules.bandwidth import oracle_h_xi, select_h_xi
from hfnoise.modules.bandwidth.schemas import BandwidthConfig
from hfnoise.modules.benchmark import BenchmarkRunner
from hfnoise.modules.benchmark.schemas import BenchmarkConfig, BenchmarkReport
from hfnoise.modules.density import default_x_grid, estimate_density, ise
from hfnoise.modules.density.schemas import KernelSpec
from hfnoise.modules.simulation import (
    generate_noise,
    make_observations,
    make_time_grid,
    noise_density,
    simulate_heston,
)
from hfnoise.modules.simulation.schemas import HestonParams, NoiseSpec
from hfnoise.modules.volatility import lagged_charfn, multiscale_g
from tests.fixtures.series_examples import noise_only_series

pytestmark = [pytest.mark.integration, pytest.mark.slow]

REPLICATIONS = 200


def run(**design) -> BenchmarkReport:
    config = BenchmarkConfig(
        replications=REPLICATIONS, workers=get_settings().workers, **design
    )
    report = BenchmarkRunner(config).run()
    assert report.failure_rate <= get_settings().max_failure_rate
    return report


class TestDensityAccuracy:
    """Median ISE of the selected-bandwidth sinc estimate."""

    def test_median_ise_bands(self):
        report = run(delta_s_values=[30, 5], estimators=["density"])
        thirty, five = (cell.density for cell in report.cells)

        assert 0.13 <= thirty.median <= 0.59
        assert 0.04 <= five.median <= 0.27

    def test_ise_decreases_with_sample_size(self):
        deltas = [30, 5, 1]
        report = run(models=["ii"], delta_s_values=deltas, estimators=["density"])
        medians = [cell.density.median for cell in report.cells]
        sizes = [23400 // delta for delta in deltas]
        slope = np.polyfit(np.log(sizes), np.log(medians), 1)[0]

        assert -0.85 <= slope <= -0.25


class TestMomentAccuracy:
    """Relative deviations of the second noise moment, in percent."""

    def test_small_deviation_at_one_second(self):
        report = run(delta_s_values=[1], estimators=["moments"], kmax=1)
        second = report.cells[0].moments[0]

        assert abs(second.mean_x100) <= 0.5
        assert 0.5 <= second.sd_x100 <= 2.2

    def test_bias_when_noise_is_small(self):
        report = run(sigma_u_values=[0.001], estimators=["moments"], kmax=1)

        assert 25.0 <= report.cells[0].moments[0].mean_x100 <= 60.0


class TestVolatilityAccuracy:
    """Relative deviations of the integrated-volatility estimate."""

    def test_bias_and_spread_at_five_seconds(self):
        report = run(delta_s_values=[5], estimators=["ivol"])
        summary = report.cells[0].ivol

        assert abs(summary.mean_x100) <= 5.0
        assert 12.0 <= summary.sd_x100 <= 24.0

    def test_error_decreases_with_sample_size(self):
        report = run(delta_s_values=[30, 5, 1], estimators=["ivol"])
        errors = [cell.ivol.median_abs for cell in report.cells]

        assert errors[0] > errors[1] > errors[2]


class TestNoiseCancellation:
    """The multiscale combination removes the dominant noise term."""

    def test_pure_noise_series(self):
        series = noise_only_series(n=4680, sigma_u=0.005, seed=11)
        s = np.linspace(0.0, 4.0 / (np.sqrt(2.0) * 0.005), 400)
        combined = np.abs(multiscale_g(series, s).real)
        first_lag = np.abs(lagged_charfn(series.y, 1, s))

        assert combined.max() <= 0.05 * first_lag.max()


class TestBandwidthSelection:
    """Selected (h, xi) against the best grid point in hindsight."""

    def test_selection_close_to_oracle(self):
        params = HestonParams.model_i()
        spec = NoiseSpec(family="normal", sigma_u=0.005)
        truth = noise_density(spec)
        close = 0
        for replication in range(20):
            seed = child_seed(get_settings().seed, replication)
            grid = make_time_grid(30)
            path = simulate_heston(params, grid, seed=child_seed(seed, 1))
            noise = generate_noise(spec, len(grid), seed=child_seed(seed, 2))
            series = make_observations(path, noise)

            selection = select_h_xi(series, BandwidthConfig(seed=seed))
            x_grid = default_x_grid(series)
            estimate = estimate_density(
                series,
                KernelSpec(family="sinc", h=selection.h_hat),
                selection.xi_hat,
                x_grid=x_grid,
            )
            h_grid = np.geomspace(selection.h_hat / 10.0, selection.h_hat * 10.0, 21)
            oracle = oracle_h_xi(
                series,
                truth,
                "sinc",
                h_grid,
                selection.search_grids["xi"],
                x_grid=x_grid,
            )
            close += ise(estimate, truth) <= 2.0 * oracle.ise

        assert close >= 15
