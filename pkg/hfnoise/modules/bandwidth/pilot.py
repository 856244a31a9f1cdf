"""Pilot kernel density estimates and their Sheather-Jones bandwidths.

The bandwidth solves h = {R(K) / (n |S_D(alpha_2(h))|)}^(1/5) with the
Gaussian kernel, R(K) = 1 / (2 sqrt(pi)), and the functional estimates
S_D, T_D computed from binned data. The root is bracketed on
[1e-3, 10] times the normal-reference bandwidth and found by bisection.
"""

import math

import numpy as np
from scipy.optimize import bisect
from scipy.signal import fftconvolve

from hfnoise.core.exceptions import InvalidInputError
from hfnoise.modules.bandwidth.schemas import PilotBandwidth
from hfnoise.modules.density.schemas import DensityEstimate, KernelSpec
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

MIN_DISTINCT = 16
BINS = 2048
BRACKET = (1e-3, 10.0)
ROUGHNESS_GAUSSIAN = 1.0 / (2.0 * math.sqrt(math.pi))
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_BLOCK_ELEMENTS = 1 << 22


def _phi4(x: np.ndarray) -> np.ndarray:
    return (x**4 - 6.0 * x**2 + 3.0) * np.exp(-0.5 * x**2) / _SQRT_2PI


def _phi6(x: np.ndarray) -> np.ndarray:
    return (x**6 - 15.0 * x**4 + 45.0 * x**2 - 15.0) * np.exp(-0.5 * x**2) / _SQRT_2PI


class _BinnedPairs:
    """Pairwise-difference sums over linearly binned data.

    sum_i sum_j g((x_i - x_j) / a) is approximated by
    sum_d g(d delta / a) c_d, where c is the autocorrelation of the bin
    counts. The diagonal i = j is included.
    """

    def __init__(self, data: np.ndarray, bins: int = BINS):
        low, high = float(data.min()), float(data.max())
        self.delta = (high - low) / (bins - 1)
        position = (data - low) / self.delta
        left = np.minimum(np.floor(position).astype(int), bins - 2)
        weight = position - left
        counts = np.bincount(left, weights=1.0 - weight, minlength=bins)
        counts += np.bincount(left + 1, weights=weight, minlength=bins)
        self.lags = np.arange(-(bins - 1), bins) * self.delta
        self.pair_counts = fftconvolve(counts, counts[::-1])
        self.size = data.size

    def functional(self, kernel, scale: float) -> float:
        return float(np.dot(kernel(self.lags / scale), self.pair_counts))


def normal_reference(data) -> float:
    """1.06 min(sd, IQR / 1.349) n^(-1/5)."""
    data = np.asarray(data, dtype=float)
    q75, q25 = np.percentile(data, [75, 25])
    sd = float(np.std(data, ddof=1))
    spread = min(sd, (q75 - q25) / 1.349) if q75 > q25 else sd
    return 1.06 * spread * data.size ** (-0.2)


def sheather_jones(data) -> PilotBandwidth:
    """Solve-the-equation plug-in bandwidth of a Gaussian KDE.

    Parameters
    ----------
    data : array_like
        Samples with at least 16 distinct values.

    Returns
    -------
    PilotBandwidth
        The plug-in bandwidth, or the normal-reference bandwidth with
        ``method="normal_reference"`` when the bracket holds no root.

    Raises
    ------
    InvalidInputError
        If fewer than 16 distinct values are given.
    """
    data = np.asarray(data, dtype=float)
    data = data[np.isfinite(data)]
    if np.unique(data).size < MIN_DISTINCT:
        message = f"Sheather-Jones needs {MIN_DISTINCT} distinct values"
        logger.error(message)
        raise InvalidInputError(message)

    n = data.size
    q75, q25 = np.percentile(data, [75, 25])
    spread = float(q75 - q25) if q75 > q25 else 1.349 * float(np.std(data, ddof=1))
    h_ref = normal_reference(data)

    binned = _BinnedPairs(data)
    a = 0.920 * spread * n ** (-1.0 / 7.0)
    b = 0.912 * spread * n ** (-1.0 / 9.0)
    sd_a = binned.functional(_phi4, a) / (n * (n - 1) * a**5)
    td_b = -binned.functional(_phi6, b) / (n * (n - 1) * b**7)
    ratio = abs(sd_a / td_b)

    def equation(h: float) -> float:
        alpha2 = 1.357 * ratio ** (1.0 / 7.0) * h ** (5.0 / 7.0)
        sd_alpha = binned.functional(_phi4, alpha2) / (n * (n - 1) * alpha2**5)
        return (ROUGHNESS_GAUSSIAN / (n * abs(sd_alpha))) ** 0.2 - h

    low, high = BRACKET[0] * h_ref, BRACKET[1] * h_ref
    if equation(low) * equation(high) > 0.0:
        logger.warning(
            f"no root in [{low:.3g}, {high:.3g}], using the normal reference"
        )
        return PilotBandwidth(value=h_ref, method="normal_reference")
    root = bisect(equation, low, high, xtol=1e-12 * h_ref, rtol=1e-12, maxiter=200)
    return PilotBandwidth(value=float(root), method="sheather_jones")


def pilot_kde(data, bandwidth: float, x_grid) -> DensityEstimate:
    """Gaussian kernel density estimate on ``x_grid`` by direct summation.

    Examples
    --------
    >>> round(float(pilot_kde([0.0], 1.0, [0.0]).values[0]), 8)
    0.39894228
    """
    if not bandwidth > 0:
        raise InvalidInputError(f"bandwidth must be positive, got {bandwidth}")
    data = np.asarray(data, dtype=float)
    x_grid = np.asarray(x_grid, dtype=float)
    values = np.empty(x_grid.size)
    block = max(1, _BLOCK_ELEMENTS // max(data.size, 1))
    for start in range(0, x_grid.size, block):
        z = (x_grid[start : start + block, None] - data[None, :]) / bandwidth
        values[start : start + block] = np.exp(-0.5 * z**2).sum(axis=1)
    values /= data.size * bandwidth * _SQRT_2PI
    return DensityEstimate(
        x_grid=x_grid,
        values=values,
        kernel=KernelSpec(family="gaussian", h=bandwidth),
    )
