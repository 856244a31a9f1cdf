"""Localized empirical characteristic functions.

The error characteristic function is estimated by

    |N(xi)^-1 sum_j sum_{t_l in S_j} cos{s (Y_l - Y_j)}|^(1/2)

and the characteristic function of a difference of two errors by its
square. Because cos is even, each unordered pair contributes twice to the
double sum; the accumulation runs over unordered pair differences only.
"""

import numpy as np

from hfnoise.core.exceptions import (
    EmptyNeighborhoodError,
    InvalidInputError,
    LengthMismatchError,
)
from hfnoise.modules.ecf.schemas import CharFnEstimate, NeighborhoodIndex
from hfnoise.modules.simulation.schemas import TickSeries

# cos evaluations per block; bounds memory independently of the pair count
_BLOCK_ELEMENTS = 1 << 22


def ecf_from_differences(diffs, s_grid) -> np.ndarray:
    """Average cos(s d) over the differences ``diffs`` at each s.

    Frequencies are processed in blocks so that memory stays bounded; the
    row sums use numpy's pairwise summation.

    Parameters
    ----------
    diffs : array_like
        Observation differences.
    s_grid : array_like
        Frequencies.

    Returns
    -------
    np.ndarray
        Signed averages, one per frequency.
    """
    diffs = np.asarray(diffs, dtype=float)
    s_grid = np.asarray(s_grid, dtype=float)
    if diffs.size == 0:
        raise EmptyNeighborhoodError("no differences to average")
    out = np.empty(s_grid.size)
    block = max(1, _BLOCK_ELEMENTS // diffs.size)
    for start in range(0, s_grid.size, block):
        chunk = s_grid[start : start + block]
        out[start : start + block] = np.cos(np.outer(chunk, diffs)).sum(axis=1)
    return out / diffs.size


def pair_differences(series: TickSeries, nbhd: NeighborhoodIndex) -> np.ndarray:
    """Differences Y_l - Y_j over the unordered pairs (j < l) of ``nbhd``."""
    if nbhd.is_empty:
        raise EmptyNeighborhoodError("the neighborhood index is empty")
    if int(nbhd.counts.size) != len(series):
        raise LengthMismatchError(
            f"index built for {nbhd.counts.size} points, series has {len(series)}"
        )
    pairs = nbhd.unordered_pairs
    return series.y[pairs[:, 1]] - series.y[pairs[:, 0]]


def _check_s_grid(s_grid) -> np.ndarray:
    s_grid = np.asarray(s_grid, dtype=float)
    if s_grid.ndim != 1 or not np.all(np.isfinite(s_grid)):
        raise InvalidInputError("s_grid must be a finite one-dimensional array")
    return s_grid


def ecf_error(series: TickSeries, nbhd: NeighborhoodIndex, s_grid) -> CharFnEstimate:
    """Estimate the error characteristic function on ``s_grid``.

    The absolute value is taken before the square root.

    Raises
    ------
    EmptyNeighborhoodError
        If ``nbhd`` holds no pair.
    """
    s_grid = _check_s_grid(s_grid)
    averages = ecf_from_differences(pair_differences(series, nbhd), s_grid)
    values = np.sqrt(np.minimum(np.abs(averages), 1.0))
    return CharFnEstimate(s_grid=s_grid, values=values, xi=nbhd.xi, kind="error_fU1")


def ecf_diff(series: TickSeries, nbhd: NeighborhoodIndex, s_grid) -> CharFnEstimate:
    """Estimate the characteristic function of U - U' as the squared error estimate."""
    error = ecf_error(series, nbhd, s_grid)
    return CharFnEstimate(
        s_grid=error.s_grid,
        values=error.values**2,
        xi=error.xi,
        kind="diff_fUtilde",
    )
