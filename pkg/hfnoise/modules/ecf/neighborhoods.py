"""Neighborhood sets S_j of a time grid."""

import numpy as np

from hfnoise.core.exceptions import EmptyNeighborhoodError, InvalidInputError
from hfnoise.modules.ecf.schemas import NeighborhoodIndex
from hfnoise.modules.simulation.schemas import TimeGrid
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

# relative slack on xi so that xi = t_2 - t_1 keeps every adjacent pair of a
# floating equispaced grid
XI_RELATIVE_TOLERANCE = 1e-9


def build_neighborhoods(grid: TimeGrid, xi: float) -> NeighborhoodIndex:
    """Collect every ordered pair (j, l), l != j, with |t_l - t_j| <= xi.

    The sweep runs once over the sorted grid: for each j the end of its
    forward window is located by binary search, the forward pairs
    (j < l) are laid out in one vectorised pass and then mirrored, so the
    cost is O(n log n + |pairs|). Both orientations are kept, as in the
    double sum over j and t_l in S_j.

    Parameters
    ----------
    grid : TimeGrid
        Observation grid.
    xi : float
        Window half-width in years, positive.

    Returns
    -------
    NeighborhoodIndex
        Pairs, per-point counts N_j and total N(xi).

    Raises
    ------
    InvalidInputError
        If ``xi`` is not positive.
    EmptyNeighborhoodError
        If no two grid points lie within ``xi`` of each other.

    Examples
    --------
    >>> grid = TimeGrid(points=[0.0, 1.0, 2.0], horizon=2.0)
    >>> build_neighborhoods(grid, 1.5).total
    4
    """
    if not xi > 0:
        raise InvalidInputError(f"xi must be positive, got {xi}")

    times = grid.points
    size = times.size
    index = np.arange(size)
    reach = xi * (1.0 + XI_RELATIVE_TOLERANCE)
    window_end = np.searchsorted(times, times + reach, side="right")
    forward = window_end - index - 1
    n_forward = int(forward.sum())

    if n_forward == 0:
        message = f"no pair of grid points lies within xi={xi}"
        logger.error(message)
        raise EmptyNeighborhoodError(message)

    left = np.repeat(index, forward)
    group_start = np.repeat(np.cumsum(forward) - forward, forward)
    right = left + (np.arange(n_forward) - group_start) + 1

    counts = np.bincount(left, minlength=size) + np.bincount(right, minlength=size)
    pairs = np.concatenate(
        [np.column_stack([left, right]), np.column_stack([right, left])]
    )
    return NeighborhoodIndex(
        pairs=pairs, counts=counts, total=2 * n_forward, xi=float(xi)
    )
