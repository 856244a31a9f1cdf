"""Multiscale combination of lagged empirical characteristic functions.

    G(s) = sum_m a_m phi_K_m(s) + zeta {phi_K_1(s) - phi_K_2(s)}
    phi_K(s) = K^-1 sum_{l=K}^{n} exp{is (Y_l - Y_{l-K})}

The weights cancel the dominant noise term n f_Utilde^ft(s), leaving a
quantity proportional to -(s^2 / 2) f_Utilde^ft(s) times the integrated
variance.
"""

import math

import numpy as np

from hfnoise.core.exceptions import SeriesTooShortError
from hfnoise.modules.simulation.schemas import TickSeries
from hfnoise.modules.volatility.schemas import MultiscaleWeights

MIN_INCREMENTS = 9

_BLOCK_ELEMENTS = 1 << 21


def multiscale_weights(n: int) -> MultiscaleWeights:
    """Weights for a series with ``n`` increments (n + 1 observations).

    Examples
    --------
    >>> weights = multiscale_weights(16)
    >>> weights.N, [round(a, 12) for a in weights.a]
    (4, [-0.3, -0.2, 0.3, 1.2])
    """
    if n < MIN_INCREMENTS:
        raise SeriesTooShortError(
            f"the multiscale combination needs n >= {MIN_INCREMENTS}, got {n}"
        )
    N = math.isqrt(n + 1)
    scales = list(range(1, N + 1))
    weights = [
        12.0 * k * (m - N / 2.0 - 0.5) / (N * (N * N - 1))
        for m, k in enumerate(scales, 1)
    ]
    zeta = scales[0] * scales[1] / ((n + 1) * (scales[1] - scales[0]))
    return MultiscaleWeights(n=n, N=N, K=scales, a=weights, zeta=zeta)


def lagged_charfn(y: np.ndarray, lag: int, s: np.ndarray) -> np.ndarray:
    """phi_K(s) for lag K over all s, in blocks of frequencies."""
    increments = y[lag:] - y[:-lag]
    out = np.empty(s.size, dtype=complex)
    block = max(1, _BLOCK_ELEMENTS // max(increments.size, 1))
    for start in range(0, s.size, block):
        chunk = s[start : start + block]
        phases = np.exp(1j * np.outer(chunk, increments))
        out[start : start + block] = phases.sum(axis=1)
    return out / lag


def multiscale_g(series: TickSeries, s):
    """Evaluate G at a scalar or an array of frequencies.

    Returns a complex scalar for scalar ``s`` and a complex array
    otherwise.

    Raises
    ------
    SeriesTooShortError
        If the series has fewer than 10 observations.
    """
    weights = multiscale_weights(series.n)
    scalar = np.ndim(s) == 0
    s = np.atleast_1d(np.asarray(s, dtype=float))
    y = series.y

    phis = {k: lagged_charfn(y, k, s) for k in weights.K}
    total = sum(a * phis[k] for a, k in zip(weights.a, weights.K))
    total = total + weights.zeta * (phis[weights.K[0]] - phis[weights.K[1]])
    return complex(total[0]) if scalar else total
