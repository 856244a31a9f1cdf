"""Deconvolution density estimation of the measurement error."""

from hfnoise.modules.density.inversion import (
    default_x_grid,
    estimate_density,
    frequency_grid,
    invert_density,
    ise,
    robust_scale,
    truncate_negative,
)

__all__ = [
    "invert_density",
    "truncate_negative",
    "ise",
    "frequency_grid",
    "default_x_grid",
    "estimate_density",
    "robust_scale",
]
