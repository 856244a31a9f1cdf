"""Measurement-error draws and their closed-form laws."""

import math
from typing import Callable, List

import numpy as np
from scipy import stats

from hfnoise.core.exceptions import InvalidInputError
from hfnoise.modules.simulation.schemas import NoiseSpec

T_DOF = 8


def generate_noise(spec: NoiseSpec, count: int, seed=None) -> np.ndarray:
    """Draw ``count`` i.i.d. errors from ``spec``.

    ``scaled_t8`` draws are sigma_u times a standard t(8) variate, so their
    variance is sigma_u^2 * 8/6 rather than sigma_u^2.

    Raises
    ------
    InvalidInputError
        If ``count`` < 1.
    """
    if count < 1:
        raise InvalidInputError(f"count must be >= 1, got {count}")
    rng = np.random.default_rng(seed)
    if spec.family == "normal":
        draws = rng.standard_normal(count)
    else:
        draws = rng.standard_t(T_DOF, count)
    return spec.sigma_u * draws


def noise_density(spec: NoiseSpec) -> Callable[[np.ndarray], np.ndarray]:
    """Return the true density f_U of ``spec`` as a vectorised callable.

    Raises
    ------
    InvalidInputError
        If ``sigma_u`` is 0 (the law is degenerate and has no density).
    """
    if spec.sigma_u <= 0.0:
        raise InvalidInputError("a degenerate error law has no density")
    scale = spec.sigma_u
    if spec.family == "normal":
        return lambda x: stats.norm.pdf(np.asarray(x, dtype=float), scale=scale)
    return lambda x: stats.t.pdf(np.asarray(x, dtype=float), T_DOF, scale=scale)


def true_noise_moments(spec: NoiseSpec, kmax: int) -> List[float]:
    """Even moments E(U^2k), k = 1..kmax, of the error law.

    Normal: sigma^2k (2k-1)!!. Scaled t(nu): sigma^2k nu^k prod_{i=1..k}
    (2i-1)/(nu-2i), infinite once 2k >= nu.
    """
    moments = []
    for k in range(1, kmax + 1):
        if spec.family == "normal":
            factor = float(math.prod(range(1, 2 * k, 2)))
        elif 2 * k >= T_DOF:
            factor = math.inf
        else:
            factor = T_DOF**k * math.prod(
                (2 * i - 1) / (T_DOF - 2 * i) for i in range(1, k + 1)
            )
        moments.append(spec.sigma_u ** (2 * k) * factor)
    return moments
