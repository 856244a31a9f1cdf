"""Observation grids for one trading day.

A day of T = 1/252 years is sampled every ``delta_s`` seconds under the
6.5-hour convention, giving n = floor(23400 / delta_s) intervals. Optional
jitter displaces interior points to exercise non-equispaced code paths.
"""

import math
from typing import Optional

import numpy as np

from hfnoise.core.exceptions import GridRatioError, InvalidInputError
from hfnoise.modules.simulation.schemas import SECONDS_PER_DAY, YEAR_HORIZON, TimeGrid
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

MIN_SPACING_RATIO = 0.25


def make_time_grid(
    delta_s: int, jitter: float = 0.0, seed: Optional[int] = None
) -> TimeGrid:
    """Build the observation grid of one trading day.

    Parameters
    ----------
    delta_s : int
        Sampling interval in seconds, in {1, ..., 1800}.
    jitter : float, optional
        Fraction in [0, 0.5). Each interior point is displaced by
        uniform(-jitter, +jitter) * dt and the grid is re-sorted.
    seed : int, optional
        Seed of the jitter draws; ignored when ``jitter`` is 0.

    Returns
    -------
    TimeGrid
        Grid with n + 1 points on [0, 1/252].

    Raises
    ------
    InvalidInputError
        If ``delta_s`` or ``jitter`` is out of range.
    GridRatioError
        If the jittered grid violates min/max spacing ratio >= 0.25.

    Examples
    --------
    >>> make_time_grid(30).n
    780
    """
    if isinstance(delta_s, bool) or int(delta_s) != delta_s or not 1 <= delta_s <= 1800:
        raise InvalidInputError(
            f"delta_s must be an integer in [1, 1800], got {delta_s}"
        )
    if not 0.0 <= jitter < 0.5:
        raise InvalidInputError(f"jitter must lie in [0, 0.5), got {jitter}")

    n = int(math.floor(SECONDS_PER_DAY / delta_s))
    horizon = YEAR_HORIZON
    # equals delta_s seconds whenever delta_s divides the trading day
    dt = horizon / n
    points = np.linspace(0.0, horizon, n + 1)

    if jitter > 0.0 and n > 1:
        rng = np.random.default_rng(seed)
        displacement = rng.uniform(-jitter, jitter, size=n - 1) * dt
        points[1:-1] = np.sort(points[1:-1] + displacement)
        spacings = np.diff(points)
        ratio = spacings.min() / spacings.max()
        if ratio < MIN_SPACING_RATIO:
            message = (
                f"jitter={jitter} produced spacing ratio {ratio:.4f} "
                f"below {MIN_SPACING_RATIO}"
            )
            logger.error(message)
            raise GridRatioError(message)

    return TimeGrid(points=points, horizon=horizon, ratio_bound=MIN_SPACING_RATIO)
