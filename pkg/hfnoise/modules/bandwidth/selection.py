"""Two-level ISE search for the deconvolution bandwidth and window.

Level 1 picks (h_1, xi_1) minimising the ISE of the deconvolution
estimate built from the level-1 surrogate differences against a pilot
kernel density estimate of f_1. Level 2 picks h_2 at xi = xi_1 in the same
way for f_2. The bandwidth for f_U is extrapolated as h_1^2 / h_2 and the
window is xi_1.
"""

import math
from typing import Callable, List, Optional, Sequence

import numpy as np

from hfnoise.core.exceptions import InfeasibleSearchError, InvalidInputError
from hfnoise.core.seeding import child_seed
from hfnoise.modules.bandwidth.pilot import pilot_kde, sheather_jones
from hfnoise.modules.bandwidth.schemas import (
    GAP_TOLERANCE,
    BandwidthConfig,
    BandwidthSelection,
    OracleResult,
    SurrogateSeries,
)
from hfnoise.modules.bandwidth.surrogates import build_delta1, build_delta2
from hfnoise.modules.density import (
    default_x_grid,
    frequency_grid,
    invert_density,
    ise,
    robust_scale,
    truncate_negative,
)
from hfnoise.modules.density.schemas import KernelFamily, KernelSpec
from hfnoise.modules.ecf import build_neighborhoods, ecf_from_differences
from hfnoise.modules.ecf.schemas import CharFnEstimate
from hfnoise.modules.ingest.ties import break_ties
from hfnoise.modules.simulation.schemas import TickSeries
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()


def _search_surface(
    shells: Sequence[np.ndarray],
    xi_grid: Sequence[float],
    h_grid: Sequence[float],
    family: KernelFamily,
    s_points: int,
    x_grid: np.ndarray,
    reference: Callable[[np.ndarray], np.ndarray],
) -> np.ndarray:
    """ISE of the truncated deconvolution estimate over an (h, xi) grid.

    ``shells[k]`` holds the differences whose gap lies in
    (xi_grid[k-1], xi_grid[k]]; cosine sums are accumulated shell by shell
    so each difference is visited once per bandwidth. Points without any
    difference hold infinity.
    """
    surface = np.full((len(h_grid), len(xi_grid)), np.inf)
    for i, h in enumerate(h_grid):
        kernel = KernelSpec(family=family, h=float(h))
        s = frequency_grid(kernel, n_points=s_points)
        total = np.zeros(s.size)
        count = 0
        for k, shell in enumerate(shells):
            if shell.size:
                total += ecf_from_differences(shell, s) * shell.size
                count += shell.size
            if count == 0:
                continue
            charfn = CharFnEstimate(
                s_grid=s,
                values=np.sqrt(np.minimum(np.abs(total / count), 1.0)),
                xi=float(xi_grid[k]),
                kind="error_fU1",
            )
            estimate = truncate_negative(invert_density(charfn, kernel, x_grid))
            surface[i, k] = ise(estimate, reference)
    return surface


def _surrogate_shells(
    surrogate: SurrogateSeries, xi_grid: Sequence[float]
) -> List[np.ndarray]:
    shells = []
    previous = 0.0
    for xi in xi_grid:
        shells.append(surrogate.within(xi, above=previous))
        previous = xi
    return shells


def _pilot_subset(surrogate: SurrogateSeries, config: BandwidthConfig) -> np.ndarray:
    """Pilot samples, reduced to the smallest-spacing quarter on irregular grids."""
    gaps = surrogate.direct_gaps
    if gaps.max() / gaps.min() <= config.subset_ratio:
        return surrogate.direct
    keep = max(gaps.size // 4, 1)
    order = np.argsort(gaps, kind="stable")[:keep]
    logger.info(
        f"irregular grid: level-{surrogate.level} pilot uses "
        f"{keep} of {gaps.size} samples"
    )
    return surrogate.direct[np.sort(order)]


def _pilot_target(samples: np.ndarray, config: BandwidthConfig, stream: int):
    """Sheather-Jones bandwidth, x grid and pilot KDE of ``samples``."""
    bandwidth_data = samples
    if config.break_ties:
        seed = None if config.seed is None else child_seed(config.seed, stream)
        bandwidth_data = break_ties(samples, seed)
    bandwidth = sheather_jones(bandwidth_data)
    scale = robust_scale(samples)
    if scale == 0.0:
        raise InvalidInputError("pilot samples have no spread")
    half_width = config.x_width * scale
    x_grid = np.linspace(-half_width, half_width, config.x_points)
    return bandwidth, x_grid, pilot_kde(samples, bandwidth.value, x_grid)


def _argmin(surface: np.ndarray, what: str):
    if not np.any(np.isfinite(surface)):
        message = f"no feasible point in the {what} search grid"
        logger.error(message)
        raise InfeasibleSearchError(message)
    return np.unravel_index(int(np.argmin(surface)), surface.shape)


def select_h_xi(
    series: TickSeries, config: Optional[BandwidthConfig] = None
) -> BandwidthSelection:
    """Select the deconvolution bandwidth and window of ``series``.

    Parameters
    ----------
    series : TickSeries
        At least 10 observations.
    config : BandwidthConfig, optional
        Search settings; defaults to :class:`BandwidthConfig()`.

    Returns
    -------
    BandwidthSelection
        h_1, xi_1, h_2, the extrapolated h_hat = h_1^2 / h_2 and
        xi_hat = xi_1, with the examined grids and ISE values.

    Raises
    ------
    SeriesTooShortError
        If either surrogate construction is impossible.
    InfeasibleSearchError
        If no window of the xi grid reaches a surrogate difference.
    """
    config = config or BandwidthConfig()
    spacings = series.grid.spacings
    if spacings.size == 0:
        raise InvalidInputError("the series has no increments")
    median_dt = float(np.median(spacings))
    xi_grid = [multiplier * median_dt for multiplier in config.xi_multipliers]
    max_lag = math.ceil(xi_grid[-1] * (1.0 + GAP_TOLERANCE) / float(spacings.min())) + 1

    level1 = build_delta1(series, max_lag=max_lag)
    level2 = build_delta2(series, seed=config.seed, max_lag=max_lag)

    pilot1, x1, target1 = _pilot_target(_pilot_subset(level1, config), config, stream=1)
    low, high = config.h_span
    h_grid = pilot1.value * np.geomspace(low, high, config.h_points)

    surface1 = _search_surface(
        _surrogate_shells(level1, xi_grid),
        xi_grid,
        h_grid,
        config.kernel,
        config.s_points,
        x1,
        lambda _: target1.values,
    )
    i1, k1 = _argmin(surface1, "level-1")
    h1 = float(h_grid[i1])
    xi1 = float(xi_grid[k1])

    pilot2, x2, target2 = _pilot_target(_pilot_subset(level2, config), config, stream=2)
    surface2 = _search_surface(
        [level2.within(xi1)],
        [xi1],
        h_grid,
        config.kernel,
        config.s_points,
        x2,
        lambda _: target2.values,
    )[:, 0]
    (i2,) = _argmin(surface2, "level-2")
    h2 = float(h_grid[i2])

    selection = BandwidthSelection(
        h1=h1,
        xi1=xi1,
        h2=h2,
        h_hat=h1**2 / h2,
        xi_hat=xi1,
        search_grids={"h": h_grid.tolist(), "xi": xi_grid},
        ise_surface=surface1.tolist(),
        ise_level2=surface2.tolist(),
        pilot_bandwidths={"level1": pilot1.value, "level2": pilot2.value},
    )
    logger.info(
        f"bandwidth selection: h1={h1:.4g} xi1={xi1:.4g} h2={h2:.4g} "
        f"h_hat={selection.h_hat:.4g}"
    )
    return selection


def oracle_h_xi(
    series: TickSeries,
    truth: Callable[[np.ndarray], np.ndarray],
    family: KernelFamily,
    h_grid: Sequence[float],
    xi_grid: Sequence[float],
    x_grid: Optional[np.ndarray] = None,
    s_points: int = 512,
) -> OracleResult:
    """Grid point minimising the ISE of the density estimate against ``truth``.

    Used to judge the data-driven selection on simulated data, where the
    error density is known.
    """
    xi_grid = sorted(float(xi) for xi in xi_grid)
    if x_grid is None:
        x_grid = default_x_grid(series)
    nbhd = build_neighborhoods(series.grid, xi_grid[-1])
    pairs = nbhd.unordered_pairs
    diffs = series.y[pairs[:, 1]] - series.y[pairs[:, 0]]
    gaps = series.times[pairs[:, 1]] - series.times[pairs[:, 0]]

    shells = []
    previous = -np.inf
    for xi in xi_grid:
        upper = xi * (1.0 + GAP_TOLERANCE)
        shells.append(diffs[(gaps <= upper) & (gaps > previous)])
        previous = upper

    surface = _search_surface(
        shells, xi_grid, list(h_grid), family, s_points, np.asarray(x_grid), truth
    )
    i, k = _argmin(surface, "oracle")
    return OracleResult(
        h=float(h_grid[i]),
        xi=xi_grid[k],
        ise=float(surface[i, k]),
        h_grid=[float(h) for h in h_grid],
        xi_grid=xi_grid,
        ise_surface=surface.tolist(),
    )
