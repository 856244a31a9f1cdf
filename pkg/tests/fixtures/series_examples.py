"""Hand-built series for unit tests."""

from typing import Optional, Sequence

import numpy as np

from hfnoise.modules.simulation import generate_noise, make_time_grid
from hfnoise.modules.simulation.schemas import NoiseSpec, TickSeries, TimeGrid


def series_from(
    times: Sequence[float], values: Sequence[float], ratio_bound: Optional[float] = None
) -> TickSeries:
    times = np.asarray(times, dtype=float)
    grid = TimeGrid(points=times, horizon=float(times[-1]), ratio_bound=ratio_bound)
    return TickSeries(grid=grid, y=values)


def three_point_series() -> TickSeries:
    """Grid {0, 1, 2} with Y = {0, 1, 0}."""
    return series_from([0.0, 1.0, 2.0], [0.0, 1.0, 0.0])


def equispaced_series(values: Sequence[float], dt: float = 1.0) -> TickSeries:
    values = np.asarray(values, dtype=float)
    return series_from(dt * np.arange(values.size), values)


def noise_only_series(
    n: int,
    sigma_u: float,
    seed: int,
    family: str = "normal",
    delta_s: Optional[int] = None,
) -> TickSeries:
    """Pure noise (X = 0) on an equispaced grid with n intervals."""
    if delta_s is not None:
        grid = make_time_grid(delta_s)
    else:
        grid = TimeGrid(points=np.linspace(0.0, 1.0, n + 1), horizon=1.0)
    spec = NoiseSpec(family=family, sigma_u=sigma_u)
    noise = generate_noise(spec, len(grid), seed=seed)
    return TickSeries(grid=grid, y=noise)
