"""Even-moment estimation of the measurement error."""

from hfnoise.modules.moments.estimators import (
    convolve_moments,
    estimate_moments,
    mtilde_moments,
    recover_moments,
)

__all__ = ["mtilde_moments", "recover_moments", "convolve_moments", "estimate_moments"]
