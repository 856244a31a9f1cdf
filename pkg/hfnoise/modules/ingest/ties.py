"""Tie-breaking perturbation of pilot samples.

Prices on a tick grid produce many identical differences. Each value is
perturbed by N(0, a_j^2), where 2 a_j is the larger of the distances to
the nearest distinct smaller and larger values.
"""

from typing import Optional

import numpy as np

from hfnoise.core.exceptions import InvalidInputError
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()


def tie_scales(deltas) -> np.ndarray:
    """Half the larger gap from each value to its distinct neighbours.

    Examples
    --------
    >>> tie_scales([0.0, 0.0, 1.0]).tolist()
    [0.5, 0.5, 0.5]
    """
    values = np.asarray(deltas, dtype=float)
    distinct = np.unique(values)
    if distinct.size < 2:
        message = f"tie breaking needs at least 2 distinct values, got {distinct.size}"
        logger.error(message)
        raise InvalidInputError(message)

    position = np.searchsorted(distinct, values)
    gaps = np.diff(distinct)
    padded = np.concatenate([[0.0], gaps, [0.0]])
    below = padded[position]
    above = padded[position + 1]
    return np.maximum(below, above) / 2.0


def break_ties(deltas, seed: Optional[int] = None) -> np.ndarray:
    """Return ``deltas`` with every value perturbed by N(0, a_j^2).

    Only pilot-bandwidth computations use the perturbed values.

    Raises
    ------
    InvalidInputError
        If fewer than two distinct values are present.
    """
    scales = tie_scales(deltas)
    rng = np.random.default_rng(seed)
    perturbation = rng.normal(0.0, 1.0, size=scales.size) * scales
    return np.asarray(deltas, dtype=float) + perturbation
