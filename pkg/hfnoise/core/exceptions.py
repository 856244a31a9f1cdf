"""Exception hierarchy for hfnoise.

Precondition violations derive from :class:`InvalidInputError` (also a
``ValueError``); failures of an estimator on valid input derive from
:class:`EstimationError`. The CLI maps the two families to distinct exit
codes.
"""


class HFNoiseError(Exception):
    """Base class for all hfnoise errors."""


class InvalidInputError(HFNoiseError, ValueError):
    """An operation was called with input violating its preconditions."""


class SeriesTooShortError(InvalidInputError):
    """The series has fewer observations than the operation needs."""


class GridRatioError(InvalidInputError):
    """A time grid violates the min/max spacing ratio bound."""


class LengthMismatchError(InvalidInputError):
    """Two arrays that must be aligned have different lengths."""


class KernelSupportError(InvalidInputError):
    """A frequency grid does not cover the kernel's effective support."""


class EstimationError(HFNoiseError):
    """An estimator could not produce a value from valid input."""


class EmptyNeighborhoodError(EstimationError):
    """No pair of time points lies within the window xi."""


class DegenerateDesignError(EstimationError):
    """The volatility regression design has no nonzero abscissa."""


class EmptySeriesError(EstimationError):
    """Tick cleaning removed every record."""


class InfeasibleSearchError(EstimationError):
    """A bandwidth search grid contains no usable point."""
