"""Simulation and observation schemas.

This module defines the pydantic models describing time grids, the Heston
ground truth, the measurement-error law, latent paths and observed series.
Times are expressed in years under the 252-day, 6.5-hour convention.
"""

import math
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from hfnoise.core.arrays import FloatArray

TRADING_DAYS = 252
SECONDS_PER_DAY = 6.5 * 3600
YEAR_HORIZON = 1.0 / TRADING_DAYS


class TimeGrid(BaseModel):
    """Ordered observation times t_0 < ... < t_n on [0, T].

    Attributes
    ----------
    points : np.ndarray
        Observation times in years, strictly increasing, starting at 0 and
        ending at ``horizon``.
    horizon : float
        The horizon T in years.
    ratio_bound : Optional[float]
        Lower bound enforced on min(dt)/max(dt). Simulated grids use 0.25;
        ingested tick grids carry None (no bound).

    Examples
    --------
    >>> grid = TimeGrid(points=[0.0, 0.5, 1.0], horizon=1.0)
    >>> grid.n
    2
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    points: FloatArray
    horizon: float = Field(..., ge=0.0)
    ratio_bound: Optional[float] = Field(default=0.25, gt=0.0, le=1.0)

    @model_validator(mode="after")
    def _check_grid(self) -> "TimeGrid":
        points = self.points
        if points.size == 0:
            if self.horizon != 0.0:
                raise ValueError("an empty grid must have horizon 0")
            return self
        if not np.all(np.isfinite(points)):
            raise ValueError("grid points must be finite")
        if points[0] != 0.0:
            raise ValueError(f"grid must start at 0, got {points[0]!r}")
        if not math.isclose(points[-1], self.horizon, rel_tol=1e-12, abs_tol=0.0):
            raise ValueError(
                f"grid must end at the horizon {self.horizon!r}, got {points[-1]!r}"
            )
        if points.size > 1:
            spacings = np.diff(points)
            if np.any(spacings <= 0):
                raise ValueError("grid points must be strictly increasing")
            if self.ratio_bound is not None:
                ratio = spacings.min() / spacings.max()
                if ratio < self.ratio_bound:
                    raise ValueError(
                        f"min/max spacing ratio {ratio:.4f} is below {self.ratio_bound}"
                    )
        return self

    @property
    def n(self) -> int:
        """Number of intervals (one less than the number of points)."""
        return max(int(self.points.size) - 1, 0)

    @property
    def spacings(self) -> np.ndarray:
        """Interval lengths dt_j = t_j - t_{j-1}."""
        return np.diff(self.points)

    @property
    def spacing_ratio(self) -> float:
        """min(dt)/max(dt), or 1.0 for grids with fewer than two intervals."""
        spacings = self.spacings
        if spacings.size < 2:
            return 1.0
        return float(spacings.min() / spacings.max())

    def __len__(self) -> int:
        return int(self.points.size)


class HestonParams(BaseModel):
    """Ground-truth parameters of the zero-drift Heston model.

    dX_t = sigma_t dB_t, d sigma_t^2 = kappa (tau - sigma_t^2) dt
    + gamma sigma_t dW_t, with corr(dB, dW) = rho.

    Attributes
    ----------
    kappa : float
        Mean-reversion rate (1/year), positive.
    tau : float
        Long-run variance level, positive.
    gamma : float
        Volatility of variance, non-negative.
    rho : float
        Correlation of the two Brownian motions, in [-1, 1].
    x0 : float
        Initial log-price.
    sigma0_sq : Optional[float]
        Initial variance; None means ``tau``.
    """

    model_config = ConfigDict(frozen=True)

    kappa: float = Field(..., gt=0.0)
    tau: float = Field(..., gt=0.0)
    gamma: float = Field(..., ge=0.0)
    rho: float = Field(..., ge=-1.0, le=1.0)
    x0: float = math.log(100.0)
    sigma0_sq: Optional[float] = Field(default=None, ge=0.0)

    @property
    def initial_variance(self) -> float:
        return self.tau if self.sigma0_sq is None else self.sigma0_sq

    @classmethod
    def model_i(cls) -> "HestonParams":
        """Model (i): (kappa, tau, gamma, rho) = (6, 0.16, 0.5, -0.6)."""
        return cls(kappa=6.0, tau=0.16, gamma=0.5, rho=-0.6)

    @classmethod
    def model_ii(cls) -> "HestonParams":
        """Model (ii): (kappa, tau, gamma, rho) = (4, 0.09, 0.3, -0.75)."""
        return cls(kappa=4.0, tau=0.09, gamma=0.3, rho=-0.75)

    @classmethod
    def named(cls, name: str) -> "HestonParams":
        """Look up a model by its label ("i" or "ii")."""
        factories = {"i": cls.model_i, "ii": cls.model_ii}
        try:
            return factories[name]()
        except KeyError:
            raise ValueError(f"unknown model {name!r}; expected 'i' or 'ii'") from None


class NoiseSpec(BaseModel):
    """Law of the i.i.d. measurement error U.

    ``normal`` is N(0, sigma_u^2); ``scaled_t8`` is sigma_u times a standard
    Student t with 8 degrees of freedom (variance sigma_u^2 * 8/6). Both
    laws are symmetric about zero.
    """

    model_config = ConfigDict(frozen=True)

    family: Literal["normal", "scaled_t8"] = "normal"
    sigma_u: float = Field(..., ge=0.0)


class PathSample(BaseModel):
    """Latent path sampled on a time grid.

    Attributes
    ----------
    grid : TimeGrid
        Observation grid.
    x : np.ndarray
        Latent log-price X at each grid point.
    sigma_sq : np.ndarray
        Variance sigma^2 at each grid point (non-negative).
    integrated_vol : float
        Integral of sigma_t^2 over [0, T] accumulated on the simulation mesh.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    grid: TimeGrid
    x: FloatArray
    sigma_sq: FloatArray
    integrated_vol: float = Field(..., ge=0.0)

    @model_validator(mode="after")
    def _check_lengths(self) -> "PathSample":
        size = len(self.grid)
        if self.x.size != size or self.sigma_sq.size != size:
            raise ValueError("path arrays must match the grid length")
        if np.any(self.sigma_sq < 0):
            raise ValueError("sigma_sq must be non-negative")
        return self


class TickSeries(BaseModel):
    """Observed values Y_{t_j} on a time grid; the input of every estimator.

    Examples
    --------
    >>> grid = TimeGrid(points=[0.0, 1.0, 2.0], horizon=2.0)
    >>> TickSeries(grid=grid, y=[0.0, 1.0, 0.0]).n
    2
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    grid: TimeGrid
    y: FloatArray

    @model_validator(mode="after")
    def _check_values(self) -> "TickSeries":
        if self.y.size != len(self.grid):
            raise ValueError(
                f"values ({self.y.size}) and grid ({len(self.grid)}) lengths differ"
            )
        if not np.all(np.isfinite(self.y)):
            raise ValueError("observed values must be finite")
        return self

    @property
    def times(self) -> np.ndarray:
        return self.grid.points

    @property
    def n(self) -> int:
        """Number of intervals n (the series holds n + 1 observations)."""
        return self.grid.n

    def __len__(self) -> int:
        return int(self.y.size)
