"""Even moments of the measurement error.

The moments of U - U' are the empirical moments of neighborhood
differences; the moments of U follow from

    M_U,2k = 1/2 {M_Utilde,2k - sum_{j=1}^{k-1} C(2k, 2j) M_U,2j M_U,2k-2j}
"""

import math
from typing import List, Optional, Sequence

import numpy as np

from hfnoise.core.exceptions import InvalidInputError, SeriesTooShortError
from hfnoise.modules.ecf import build_neighborhoods, pair_differences
from hfnoise.modules.ecf.schemas import NeighborhoodIndex
from hfnoise.modules.moments.schemas import MAX_MOMENT_ORDER, MomentSet
from hfnoise.modules.simulation.schemas import TickSeries
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()


def _check_kmax(kmax: int) -> None:
    if not 1 <= kmax <= MAX_MOMENT_ORDER:
        raise InvalidInputError(f"kmax must lie in [1, {MAX_MOMENT_ORDER}], got {kmax}")


def mtilde_moments(
    series: TickSeries, nbhd: NeighborhoodIndex, kmax: int
) -> List[float]:
    """Empirical moments N(xi)^-1 sum_j sum_{S_j} (Y_l - Y_j)^(2k), k = 1..kmax.

    Each unordered pair enters the double sum twice with the same even
    power, so the average over unordered pairs is identical. Sums are
    compensated with :func:`math.fsum`.

    Raises
    ------
    EmptyNeighborhoodError
        If ``nbhd`` holds no pair.
    """
    _check_kmax(kmax)
    squares = pair_differences(series, nbhd) ** 2
    count = squares.size
    moments = []
    power = np.ones_like(squares)
    for _ in range(kmax):
        power = power * squares
        moments.append(math.fsum(power) / count)
    return moments


def recover_moments(m_tilde: Sequence[float]) -> List[float]:
    """Invert the convolution relation to obtain M_U,2k, k = 1..len(m_tilde).

    Examples
    --------
    >>> recover_moments([2.0, 12.0])
    [1.0, 3.0]
    """
    if len(m_tilde) == 0:
        raise InvalidInputError("m_tilde must not be empty")
    m_u: List[float] = []
    for k in range(1, len(m_tilde) + 1):
        cross = math.fsum(
            math.comb(2 * k, 2 * j) * m_u[j - 1] * m_u[k - j - 1] for j in range(1, k)
        )
        m_u.append(0.5 * (float(m_tilde[k - 1]) - cross))
    return m_u


def convolve_moments(m_u: Sequence[float]) -> List[float]:
    """Moments of U - U' from those of U, the inverse of :func:`recover_moments`."""
    if len(m_u) == 0:
        raise InvalidInputError("m_u must not be empty")
    full = [1.0] + [float(value) for value in m_u]
    return [
        math.fsum(math.comb(2 * k, 2 * j) * full[j] * full[k - j] for j in range(k + 1))
        for k in range(1, len(full))
    ]


def estimate_moments(
    series: TickSeries, xi: Optional[float] = None, kmax: int = 2
) -> MomentSet:
    """Estimate noise moments of ``series`` up to order 2 * kmax.

    ``xi`` defaults to the first grid spacing t_1 - t_0.
    """
    _check_kmax(kmax)
    if len(series) < 2:
        raise SeriesTooShortError("moment estimation needs at least two observations")
    if xi is None:
        xi = float(series.times[1] - series.times[0])
    nbhd = build_neighborhoods(series.grid, xi)
    m_tilde = mtilde_moments(series, nbhd, kmax)
    m_u = recover_moments(m_tilde)
    if any(value < 0.0 for value in m_u):
        logger.warning(f"negative noise moment estimates {m_u} at xi={xi:.3g}")
    return MomentSet(xi=xi, m_tilde=m_tilde, m_u=m_u)
