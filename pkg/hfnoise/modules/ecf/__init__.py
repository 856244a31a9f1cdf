"""Neighborhood sets and localized empirical characteristic functions."""

from hfnoise.modules.ecf.charfn import (
    ecf_diff,
    ecf_error,
    ecf_from_differences,
    pair_differences,
)
from hfnoise.modules.ecf.neighborhoods import build_neighborhoods

__all__ = [
    "build_neighborhoods",
    "ecf_error",
    "ecf_diff",
    "ecf_from_differences",
    "pair_differences",
]
