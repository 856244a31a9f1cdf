"""Kernel and density-estimate schemas."""

from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from hfnoise.core.arrays import FloatArray

KernelFamily = Literal["sinc", "gaussian"]

# K^ft(8) = exp(-32) < 1.3e-14, negligible in double precision
GAUSSIAN_SUPPORT = 8.0


class KernelSpec(BaseModel):
    """Deconvolution kernel given through its Fourier transform.

    The sinc kernel has K^ft(u) = 1 for |u| <= 1 and 0 beyond; the
    Gaussian kernel has K^ft(u) = exp(-u^2 / 2).

    Attributes
    ----------
    family : {"sinc", "gaussian"}
        Kernel family.
    h : float
        Bandwidth, positive.

    Examples
    --------
    >>> KernelSpec(family="sinc", h=0.5).s_max
    2.0
    """

    model_config = ConfigDict(frozen=True)

    family: KernelFamily = Field(default="sinc", description="Kernel family")
    h: float = Field(..., gt=0.0, description="Bandwidth")

    def fourier(self, u) -> np.ndarray:
        """Evaluate K^ft at ``u`` (already multiplied by h)."""
        u = np.asarray(u, dtype=float)
        if self.family == "sinc":
            # (1 / h) * h may round just above 1
            return (np.abs(u) <= 1.0 + 1e-12).astype(float)
        return np.exp(-0.5 * u**2)

    @property
    def s_max(self) -> float:
        """Largest |s| at which K^ft(s h) is not negligible."""
        support = 1.0 if self.family == "sinc" else GAUSSIAN_SUPPORT
        return support / self.h


class DensityEstimate(BaseModel):
    """Density values on an ordered abscissa grid.

    ``kernel`` and ``xi`` describe the deconvolution estimate that produced
    the values; pilot kernel density estimates carry a Gaussian kernel and
    no ``xi``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    x_grid: FloatArray
    values: FloatArray
    kernel: KernelSpec
    xi: Optional[float] = Field(default=None, gt=0.0)
    truncated: bool = False

    @model_validator(mode="after")
    def _check_values(self) -> "DensityEstimate":
        if self.x_grid.size != self.values.size:
            raise ValueError("x_grid and values lengths differ")
        if self.x_grid.size > 1 and np.any(np.diff(self.x_grid) <= 0):
            raise ValueError("x_grid must be strictly increasing")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("density values must be finite")
        if self.truncated and np.any(self.values < 0.0):
            raise ValueError("a truncated density cannot hold negative values")
        return self
