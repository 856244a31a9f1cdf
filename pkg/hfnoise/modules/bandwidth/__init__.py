"""Data-driven selection of the deconvolution bandwidth and window."""

from hfnoise.modules.bandwidth.pilot import normal_reference, pilot_kde, sheather_jones
from hfnoise.modules.bandwidth.selection import oracle_h_xi, select_h_xi
from hfnoise.modules.bandwidth.surrogates import build_delta1, build_delta2

__all__ = [
    "build_delta1",
    "build_delta2",
    "sheather_jones",
    "normal_reference",
    "pilot_kde",
    "select_h_xi",
    "oracle_h_xi",
]
