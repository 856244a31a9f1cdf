"""Fourier inversion of the damped error characteristic function.

    f_hat(x) = (2 pi)^-1 int exp(-isx) f_hat_U1^ft(s; xi) K^ft(sh) ds

The integrand is real and even, so the integral is computed as
pi^-1 int_0^s_max cos(sx) f_hat_U1^ft(s; xi) K^ft(sh) ds by the trapezoid
rule on the nonnegative part of the frequency grid.
"""

from typing import Callable, Optional

import numpy as np
from scipy.integrate import trapezoid
from scipy.stats import median_abs_deviation

from hfnoise.core.exceptions import InvalidInputError, KernelSupportError
from hfnoise.modules.density.schemas import DensityEstimate, KernelSpec
from hfnoise.modules.ecf import build_neighborhoods, ecf_error
from hfnoise.modules.ecf.schemas import CharFnEstimate
from hfnoise.modules.simulation.schemas import TickSeries
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

_SUPPORT_TOLERANCE = 1e-12
_BLOCK_ELEMENTS = 1 << 22


def frequency_grid(
    kernel: KernelSpec, n_points: int = 2048, symmetric: bool = False
) -> np.ndarray:
    """Default frequency grid covering the kernel's effective support.

    Returns ``n_points`` equispaced values on [0, s_max]; with
    ``symmetric=True`` the grid is mirrored onto [-s_max, s_max] and holds
    2 * n_points - 1 values, zero included once.
    """
    if n_points < 2:
        raise InvalidInputError(f"n_points must be at least 2, got {n_points}")
    half = np.linspace(0.0, kernel.s_max, n_points)
    if symmetric:
        return np.concatenate([-half[:0:-1], half])
    return half


def _half_line(charfn: CharFnEstimate, s_max: float):
    s = np.abs(charfn.s_grid)
    s, first = np.unique(s, return_index=True)
    values = charfn.values[first]
    if s.size == 0 or s[-1] < s_max * (1.0 - _SUPPORT_TOLERANCE):
        reach = s[-1] if s.size else 0.0
        message = (
            f"frequency grid reaches {reach:.6g}, "
            f"kernel support needs {s_max:.6g}"
        )
        logger.error(message)
        raise KernelSupportError(message)
    if s[0] > 0.0:
        # every characteristic function equals 1 at the origin
        s = np.concatenate([[0.0], s])
        values = np.concatenate([[1.0], values])
    inside = s < s_max
    tail_value = np.interp(s_max, s, values)
    return (
        np.concatenate([s[inside], [s_max]]),
        np.concatenate([values[inside], [tail_value]]),
    )


def invert_density(
    charfn: CharFnEstimate, kernel: KernelSpec, x_grid
) -> DensityEstimate:
    """Invert an error characteristic-function estimate into a density.

    Parameters
    ----------
    charfn : CharFnEstimate
        Estimate of kind ``error_fU1``. Negative frequencies are folded
        onto the half line.
    kernel : KernelSpec
        Damping kernel and bandwidth.
    x_grid : array_like
        Strictly increasing abscissae.

    Returns
    -------
    DensityEstimate
        Untruncated estimate; negative lobes are kept.

    Raises
    ------
    InvalidInputError
        If ``charfn`` is not an error characteristic function.
    KernelSupportError
        If the frequency grid stops short of the kernel's support.
    """
    if charfn.kind != "error_fU1":
        raise InvalidInputError(f"expected an error_fU1 estimate, got {charfn.kind}")
    x_grid = np.asarray(x_grid, dtype=float)
    s, values = _half_line(charfn, kernel.s_max)
    weights = values * kernel.fourier(s * kernel.h)

    density = np.empty(x_grid.size)
    block = max(1, _BLOCK_ELEMENTS // s.size)
    for start in range(0, x_grid.size, block):
        chunk = x_grid[start : start + block]
        integrand = np.cos(np.outer(chunk, s)) * weights
        density[start : start + block] = trapezoid(integrand, s, axis=1) / np.pi

    return DensityEstimate(
        x_grid=x_grid, values=density, kernel=kernel, xi=charfn.xi, truncated=False
    )


def truncate_negative(est: DensityEstimate) -> DensityEstimate:
    """Clamp negative values to zero without renormalising."""
    return DensityEstimate(
        x_grid=est.x_grid,
        values=np.maximum(est.values, 0.0),
        kernel=est.kernel,
        xi=est.xi,
        truncated=True,
    )


def ise(est: DensityEstimate, truth: Callable[[np.ndarray], np.ndarray]) -> float:
    """Integrated squared error of ``est`` against ``truth`` on its x grid.

    Examples
    --------
    >>> from scipy.stats import norm
    >>> zero = DensityEstimate(x_grid=np.linspace(-10, 10, 4001),
    ...     values=np.zeros(4001), kernel=KernelSpec(h=1.0))
    >>> round(ise(zero, norm.pdf), 4)
    0.2821
    """
    reference = np.asarray(truth(est.x_grid), dtype=float)
    return float(trapezoid((est.values - reference) ** 2, est.x_grid))


def robust_scale(values) -> float:
    """Normal-consistent MAD, falling back to the standard deviation."""
    values = np.asarray(values, dtype=float)
    scale = float(median_abs_deviation(values, scale="normal"))
    if scale == 0.0:
        scale = float(np.std(values))
    return scale


def default_x_grid(
    series: TickSeries, n_points: int = 512, width: float = 6.0
) -> np.ndarray:
    """Abscissae spanning +-width robust scales of the pilot samples.

    The pilot samples are the scaled first differences
    (Y_{j+1} - Y_j) / sqrt(2).

    Raises
    ------
    InvalidInputError
        If the series has fewer than two observations or no spread.
    """
    if len(series) < 2:
        raise InvalidInputError("at least two observations are needed for an x grid")
    scale = robust_scale(np.diff(series.y) / np.sqrt(2.0))
    if scale == 0.0:
        raise InvalidInputError("the series has no spread; cannot size an x grid")
    return np.linspace(-width * scale, width * scale, n_points)


def estimate_density(
    series: TickSeries,
    kernel: KernelSpec,
    xi: float,
    x_grid: Optional[np.ndarray] = None,
    s_grid: Optional[np.ndarray] = None,
    truncate: bool = True,
) -> DensityEstimate:
    """Estimate the error density of ``series`` end to end.

    Builds the neighborhoods at ``xi``, the error characteristic function
    on ``s_grid`` (default :func:`frequency_grid`), inverts it on
    ``x_grid`` (default :func:`default_x_grid`) and truncates negative
    values unless ``truncate`` is False.
    """
    if x_grid is None:
        x_grid = default_x_grid(series)
    if s_grid is None:
        s_grid = frequency_grid(kernel)
    nbhd = build_neighborhoods(series.grid, xi)
    estimate = invert_density(ecf_error(series, nbhd, s_grid), kernel, x_grid)
    return truncate_negative(estimate) if truncate else estimate
