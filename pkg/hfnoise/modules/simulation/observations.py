"""Noisy observations of a latent path and the scale transformation."""

from typing import Tuple

import numpy as np

from hfnoise.core.exceptions import InvalidInputError, LengthMismatchError
from hfnoise.modules.simulation.schemas import (
    HestonParams,
    NoiseSpec,
    PathSample,
    TickSeries,
)


def make_observations(path: PathSample, noise) -> TickSeries:
    """Return Y = X + U on the path's grid.

    Raises
    ------
    LengthMismatchError
        If ``noise`` does not have one value per grid point.
    """
    noise = np.asarray(noise, dtype=float)
    if noise.shape != path.x.shape:
        raise LengthMismatchError(
            f"noise has {noise.size} values for {path.x.size} grid points"
        )
    return TickSeries(grid=path.grid, y=path.x + noise)


def rescale_model(
    params: HestonParams, spec: NoiseSpec, c: float
) -> Tuple[HestonParams, NoiseSpec]:
    """Replace (tau, gamma, sigma_U^2, X_0) by (c^2 tau, c gamma, c^2 sigma_U^2, c X_0).

    An explicit initial variance is scaled by c^2 as well. With shared seeds
    the rescaled model produces paths and errors equal to c times the
    original ones.

    Raises
    ------
    InvalidInputError
        If ``c`` is not positive.
    """
    if c <= 0:
        raise InvalidInputError(f"scale factor must be positive, got {c}")
    sigma0_sq = None if params.sigma0_sq is None else c * c * params.sigma0_sq
    scaled_params = params.model_copy(
        update={
            "tau": c * c * params.tau,
            "gamma": c * params.gamma,
            "x0": c * params.x0,
            "sigma0_sq": sigma0_sq,
        }
    )
    scaled_spec = spec.model_copy(update={"sigma_u": c * spec.sigma_u})
    return scaled_params, scaled_spec
