"""Frequency-domain multiscale estimation of integrated volatility."""

from hfnoise.modules.volatility.multiscale import (
    lagged_charfn,
    multiscale_g,
    multiscale_weights,
)
from hfnoise.modules.volatility.regression import (
    estimate_iv,
    realized_volatility,
    select_sgrid,
)

__all__ = [
    "multiscale_weights",
    "multiscale_g",
    "lagged_charfn",
    "select_sgrid",
    "estimate_iv",
    "realized_volatility",
]
