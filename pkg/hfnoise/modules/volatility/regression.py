"""Integrated volatility by regression on the multiscale function G."""

import math
from typing import Optional

import numpy as np

from hfnoise.core.exceptions import (
    DegenerateDesignError,
    InvalidInputError,
    SeriesTooShortError,
)
from hfnoise.modules.density import robust_scale
from hfnoise.modules.ecf import build_neighborhoods, ecf_diff
from hfnoise.modules.ecf.schemas import CharFnEstimate, NeighborhoodIndex
from hfnoise.modules.simulation.schemas import TickSeries
from hfnoise.modules.volatility.multiscale import multiscale_g
from hfnoise.modules.volatility.schemas import SGridSelection, VolatilityResult
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

SCAN_STEPS = 4096
SCAN_BLOCK = 256


def realized_volatility(series: TickSeries) -> float:
    """Sum of squared first differences of the observations."""
    if len(series) < 2:
        raise SeriesTooShortError("realized volatility needs at least two observations")
    return math.fsum(np.diff(series.y) ** 2)


def select_sgrid(
    charfn_diff: CharFnEstimate, m: int = 50, threshold: float = 0.99
) -> SGridSelection:
    """Place ``m`` equispaced points in (0, S].

    S is the last positive frequency of the scan (ascending) before the
    estimate first drops below ``threshold``; when it never drops, S is
    the last scanned frequency.
    """
    if charfn_diff.kind != "diff_fUtilde":
        raise InvalidInputError(
            f"expected a diff_fUtilde estimate, got {charfn_diff.kind}"
        )
    if not 0.0 < threshold < 1.0:
        raise InvalidInputError(f"threshold must lie in (0, 1), got {threshold}")
    if m < 1:
        raise InvalidInputError(f"m must be positive, got {m}")

    positive = charfn_diff.s_grid > 0.0
    order = np.argsort(charfn_diff.s_grid[positive])
    s = charfn_diff.s_grid[positive][order]
    values = charfn_diff.values[positive][order]
    if s.size == 0:
        raise InvalidInputError("the scan grid holds no positive frequency")

    below = np.flatnonzero(values < threshold)
    degenerate = False
    if below.size == 0:
        S = float(s[-1])
    elif below[0] == 0:
        S = float(s[0])
        degenerate = True
        logger.warning(f"threshold {threshold} missed at the first scan step s={S:.6g}")
    else:
        S = float(s[below[0] - 1])
    return SGridSelection(s_points=np.linspace(S / m, S, m), S=S, degenerate=degenerate)


def _scan_sgrid(
    series: TickSeries, nbhd: NeighborhoodIndex, step: float, m: int, threshold: float
) -> SGridSelection:
    """Scan s = step, 2 step, ... block by block until the threshold is crossed."""
    scanned_s = []
    scanned_values = []
    for start in range(1, SCAN_STEPS + 1, SCAN_BLOCK):
        stop = min(start + SCAN_BLOCK, SCAN_STEPS + 1)
        block = ecf_diff(series, nbhd, step * np.arange(start, stop))
        scanned_s.append(block.s_grid)
        scanned_values.append(block.values)
        if np.any(block.values < threshold):
            break
    scan = CharFnEstimate(
        s_grid=np.concatenate(scanned_s),
        values=np.concatenate(scanned_values),
        xi=nbhd.xi,
        kind="diff_fUtilde",
    )
    return select_sgrid(scan, m=m, threshold=threshold)


def estimate_iv(
    series: TickSeries,
    xi: Optional[float] = None,
    m: int = 50,
    threshold: float = 0.99,
) -> VolatilityResult:
    """Estimate the integrated variance of the latent process.

    Fits Re G(s_j) = x_j beta + e_j through the origin with
    x_j = -(s_j^2 / 2) f_hat_Utilde^ft(s_j; xi), over ``m`` points chosen
    by :func:`select_sgrid` on a scan of step S_cap / 4096, where
    S_cap = 4 / (robust scale of the first differences).

    Parameters
    ----------
    series : TickSeries
        At least 10 observations.
    xi : float, optional
        Window of the difference characteristic function; defaults to
        t_1 - t_0.
    m : int
        Number of regression points.
    threshold : float
        Level defining S.

    Returns
    -------
    VolatilityResult
        Unclamped estimate, flagged when negative.

    Raises
    ------
    SeriesTooShortError
        If the series has fewer than 10 observations.
    DegenerateDesignError
        If the series has no spread or every abscissa x_j is zero.
    """
    if len(series) < 10:
        raise SeriesTooShortError(f"need at least 10 observations, got {len(series)}")
    if xi is None:
        xi = float(series.times[1] - series.times[0])

    scale = robust_scale(np.diff(series.y))
    if scale == 0.0:
        message = "the series has no spread; the regression design is degenerate"
        logger.error(message)
        raise DegenerateDesignError(message)
    step = 4.0 / scale / SCAN_STEPS

    nbhd = build_neighborhoods(series.grid, xi)
    selection = _scan_sgrid(series, nbhd, step, m, threshold)
    s = selection.s_points
    design = -0.5 * s**2 * ecf_diff(series, nbhd, s).values
    response = multiscale_g(series, s).real

    denominator = math.fsum(design**2)
    if denominator == 0.0:
        message = "every regression abscissa is zero"
        logger.error(message)
        raise DegenerateDesignError(message)
    beta_hat = math.fsum(design * response) / denominator

    flagged = beta_hat < 0.0
    if flagged:
        logger.warning(f"negative integrated variance estimate {beta_hat:.6g}")
    return VolatilityResult(
        beta_hat=beta_hat,
        s_points=s,
        xi=xi,
        rv_baseline=realized_volatility(series),
        S=selection.S,
        flagged_negative=flagged,
        degenerate=selection.degenerate,
    )
