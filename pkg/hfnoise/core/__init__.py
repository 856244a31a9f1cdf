from .config import Settings, get_settings
from .exceptions import (
    DegenerateDesignError,
    EmptyNeighborhoodError,
    EmptySeriesError,
    EstimationError,
    GridRatioError,
    HFNoiseError,
    InfeasibleSearchError,
    InvalidInputError,
    KernelSupportError,
    LengthMismatchError,
    SeriesTooShortError,
)
from .seeding import child_seed, splitmix64

__all__ = [
    "Settings",
    "get_settings",
    "HFNoiseError",
    "InvalidInputError",
    "SeriesTooShortError",
    "GridRatioError",
    "KernelSupportError",
    "LengthMismatchError",
    "EstimationError",
    "EmptyNeighborhoodError",
    "DegenerateDesignError",
    "EmptySeriesError",
    "InfeasibleSearchError",
    "child_seed",
    "splitmix64",
]
