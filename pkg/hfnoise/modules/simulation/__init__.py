"""Synthetic observation series: Heston paths plus i.i.d. measurement error."""

from hfnoise.modules.simulation.grid import make_time_grid
from hfnoise.modules.simulation.heston import simulate_heston
from hfnoise.modules.simulation.noise import (
    generate_noise,
    noise_density,
    true_noise_moments,
)
from hfnoise.modules.simulation.observations import make_observations, rescale_model

__all__ = [
    "make_time_grid",
    "simulate_heston",
    "generate_noise",
    "noise_density",
    "true_noise_moments",
    "make_observations",
    "rescale_model",
]
