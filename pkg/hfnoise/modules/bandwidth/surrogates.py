"""Surrogate difference datasets of the bandwidth selector.

Level 1 averages pairs of observations, so its errors follow
f_1 = 2 f_U(sqrt 2 .) * f_U(sqrt 2 .); level 2 averages four, giving f_2.
Every surrogate difference combines two disjoint sets of observations.
"""

import math
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from hfnoise.core.exceptions import SeriesTooShortError
from hfnoise.modules.bandwidth.schemas import SurrogateSeries
from hfnoise.modules.simulation.schemas import TickSeries
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

SQRT2 = math.sqrt(2.0)

# largest lag built when the caller gives no max_lag; each lag holds O(n) values
DEFAULT_MAX_LAG = 64

# offsets of the level-2 constructions for lags 1, 2 and 3
LEVEL2_PATTERNS: Dict[int, Tuple[int, ...]] = {
    1: (0, 2, 4, 6),
    2: (0, 1, 4, 5),
    3: (0, 1, 2, 6),
}


def _combine(values: np.ndarray, offsets: Sequence[int], count: int) -> np.ndarray:
    """sum_k values[j + offsets[k]] for j = 0..count-1."""
    return sum(values[offset : offset + count] for offset in offsets)


def _lag_difference(values: np.ndarray, lag: int, count: int) -> np.ndarray:
    """values[j + lag] - values[j] for j = 0..count-1."""
    return values[lag : lag + count] - values[:count]


def _resolve_max_lag(n: int, max_lag: Optional[int], floor: int) -> int:
    if max_lag is None:
        max_lag = DEFAULT_MAX_LAG
    return max(1, min(max_lag, n - floor))


def build_delta1(series: TickSeries, max_lag: Optional[int] = None) -> SurrogateSeries:
    """Build the level-1 surrogate differences.

    For lags l > 1 the averaged values (Y_j + Y_{j+1}) / sqrt 2 at times
    (t_j + t_{j+1}) / 2 are differenced at lag l, for j = 0..n-l-1. For
    l = 1 the skip construction (Y_j + Y_{j+2}) / sqrt 2 at
    (t_j + t_{j+2}) / 2, j = 0..n-2, is differenced at lag 1. The pilot
    samples are (Y_{j+1} - Y_j) / sqrt 2.

    Parameters
    ----------
    series : TickSeries
        At least 4 observations (n >= 3 increments).
    max_lag : int, optional
        Largest lag built; defaults to ``DEFAULT_MAX_LAG``, capped by the
        lags the series supports.

    Raises
    ------
    SeriesTooShortError
        If the series has fewer than 4 observations.
    """
    if len(series) < 4:
        raise SeriesTooShortError(
            f"level-1 surrogates need 4 observations, got {len(series)}"
        )
    y = series.y
    t = series.times
    n = series.n
    last = _resolve_max_lag(n, max_lag, 1)

    pair_y = _combine(y, (0, 1), n) / SQRT2
    pair_t = _combine(t, (0, 1), n) / 2.0
    skip_y = _combine(y, (0, 2), n - 1) / SQRT2
    skip_t = _combine(t, (0, 2), n - 1) / 2.0

    deltas = {1: _lag_difference(skip_y, 1, n - 2)}
    gaps = {1: _lag_difference(skip_t, 1, n - 2)}
    for lag in range(2, last + 1):
        deltas[lag] = _lag_difference(pair_y, lag, n - lag)
        gaps[lag] = _lag_difference(pair_t, lag, n - lag)

    return SurrogateSeries(
        level=1,
        times={"pair": pair_t, "skip": skip_t},
        deltas=deltas,
        gaps=gaps,
        direct=np.diff(y) / SQRT2,
        direct_gaps=np.diff(t),
    )


def build_delta2(
    series: TickSeries, seed: Optional[int] = None, max_lag: Optional[int] = None
) -> SurrogateSeries:
    """Build the level-2 surrogate differences.

    For lags l >= 4 the values sum_{k=0}^{3} Y_{j+k} / 2 at the mean of
    their times, j = 0..n-3, are differenced at lag l for j = 0..n-l-3.
    Lags 1, 2 and 3 use the offset patterns {0,2,4,6}, {0,1,4,5} and
    {0,1,2,6}, differenced at j-shifts 1, 2 and 3 for j = 0..n-7 (lags 1
    and 2) and j = 0..n-9 (lag 3). The pilot samples are
    (D_j - D_k(j)) / sqrt 2 with D_j = (Y_{j+1} - Y_j) / sqrt 2 and k(j)
    drawn uniformly from {0..n-1}.

    Parameters
    ----------
    series : TickSeries
        At least 10 observations.
    seed : int, optional
        Seed of the k(j) draws.
    max_lag : int, optional
        Largest lag built; defaults to ``DEFAULT_MAX_LAG``, capped by the
        lags the series supports.

    Raises
    ------
    SeriesTooShortError
        If the series has fewer than 10 observations.
    """
    if len(series) < 10:
        raise SeriesTooShortError(
            f"level-2 surrogates need 10 observations, got {len(series)}"
        )
    y = series.y
    t = series.times
    n = series.n
    last = _resolve_max_lag(n, max_lag, 3)

    quad_y = _combine(y, (0, 1, 2, 3), n - 2) / 2.0
    quad_t = _combine(t, (0, 1, 2, 3), n - 2) / 4.0

    times = {"quad": quad_t}
    deltas = {}
    gaps = {}
    # pattern values exist for j = 0..n-6 ({0,2,4,6}, {0,1,2,6}) and j = 0..n-5
    # ({0,1,4,5}); the differenced ranges are j = 0..n-7 and j = 0..n-9
    ranges = {1: (n - 5, n - 6), 2: (n - 4, n - 6), 3: (n - 5, n - 8)}
    for lag, offsets in LEVEL2_PATTERNS.items():
        if lag > last:
            break
        size, count = ranges[lag]
        pattern_y = _combine(y, offsets, size) / 2.0
        pattern_t = _combine(t, offsets, size) / 4.0
        times[f"pattern{lag}"] = pattern_t
        deltas[lag] = _lag_difference(pattern_y, lag, count)
        gaps[lag] = _lag_difference(pattern_t, lag, count)
    for lag in range(4, last + 1):
        deltas[lag] = _lag_difference(quad_y, lag, n - lag - 2)
        gaps[lag] = _lag_difference(quad_t, lag, n - lag - 2)

    rng = np.random.default_rng(seed)
    first = np.diff(y) / SQRT2
    partner = rng.integers(0, n, size=n)
    direct = (first - first[partner]) / SQRT2
    direct_gaps = np.maximum(np.diff(t), np.diff(t)[partner])

    return SurrogateSeries(
        level=2,
        times=times,
        deltas=deltas,
        gaps=gaps,
        direct=direct,
        direct_gaps=direct_gaps,
    )
