"""Euler-Maruyama simulation of the zero-drift Heston model.

Each observation interval is split into ``substeps`` equal sub-steps. The
variance uses full truncation: max(sigma^2, 0) enters both drift and
diffusion, while the un-truncated state is carried forward.
"""

import math

import numpy as np

from hfnoise.core.exceptions import InvalidInputError
from hfnoise.modules.simulation.schemas import HestonParams, PathSample, TimeGrid


def simulate_heston(
    params: HestonParams, grid: TimeGrid, substeps: int = 10, seed=None
) -> PathSample:
    """Simulate a latent path on ``grid``.

    Parameters
    ----------
    params : HestonParams
        Model parameters.
    grid : TimeGrid
        Observation grid; the path is recorded at its points.
    substeps : int, optional
        Euler sub-steps per observation interval (default 10).
    seed : int or numpy.random.SeedSequence, optional
        Seed of the Gaussian increments.

    Returns
    -------
    PathSample
        Log-price and variance at the grid points, and the integrated
        variance sum(max(sigma^2, 0) * delta) over the sub-mesh.

    Raises
    ------
    InvalidInputError
        If ``substeps`` < 1 or the grid has no points.
    """
    if substeps < 1:
        raise InvalidInputError(f"substeps must be >= 1, got {substeps}")
    size = len(grid)
    if size == 0:
        raise InvalidInputError("cannot simulate on an empty grid")

    rng = np.random.default_rng(seed)
    n = grid.n
    z_var = rng.standard_normal((n, substeps))
    z_ind = rng.standard_normal((n, substeps))

    kappa, tau, gamma, rho = params.kappa, params.tau, params.gamma, params.rho
    rho_bar = math.sqrt(max(1.0 - rho * rho, 0.0))

    x = np.empty(size)
    sigma_sq = np.empty(size)
    x_now = params.x0
    v_now = params.initial_variance
    x[0] = x_now
    sigma_sq[0] = max(v_now, 0.0)
    integrated = 0.0

    spacings = grid.spacings
    for j in range(n):
        delta = spacings[j] / substeps
        root_delta = math.sqrt(delta)
        zv_row = z_var[j].tolist()
        zi_row = z_ind[j].tolist()
        for k in range(substeps):
            v_pos = v_now if v_now > 0.0 else 0.0
            vol = math.sqrt(v_pos)
            zv = zv_row[k]
            integrated += v_pos * delta
            x_now += vol * root_delta * (rho * zv + rho_bar * zi_row[k])
            v_now += kappa * (tau - v_pos) * delta + gamma * vol * root_delta * zv
        x[j + 1] = x_now
        sigma_sq[j + 1] = v_now if v_now > 0.0 else 0.0

    return PathSample(grid=grid, x=x, sigma_sq=sigma_sq, integrated_vol=integrated)
