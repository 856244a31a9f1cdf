"""Bandwidth-selection schemas.

The selector solves two reachable problems on surrogate datasets whose
error laws are known functions of the pilot samples, then extrapolates the
bandwidth of the unreachable one.
"""

from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from hfnoise.core.arrays import FloatArray
from hfnoise.modules.density.schemas import KernelFamily

# relative slack on xi when comparing surrogate time gaps
GAP_TOLERANCE = 1e-9


class SurrogateSeries(BaseModel):
    """Surrogate differences of one level with their time gaps.

    Attributes
    ----------
    level : int
        1 for the pairwise-averaged construction, 2 for the four-point one.
    times : dict of str to np.ndarray
        Surrogate time points of each construction, keyed by its name.
    deltas : dict of int to np.ndarray
        Surrogate differences per lag.
    gaps : dict of int to np.ndarray
        Time gap of every difference in ``deltas``.
    direct : np.ndarray
        Pilot samples whose law is the level's error law.
    direct_gaps : np.ndarray
        Grid spacing attached to each pilot sample.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    level: Literal[1, 2]
    times: Dict[str, FloatArray]
    deltas: Dict[int, FloatArray]
    gaps: Dict[int, FloatArray]
    direct: FloatArray
    direct_gaps: FloatArray

    @model_validator(mode="after")
    def _check_lags(self) -> "SurrogateSeries":
        if set(self.deltas) != set(self.gaps):
            raise ValueError("deltas and gaps must cover the same lags")
        for lag, values in self.deltas.items():
            if lag < 1:
                raise ValueError(f"lags start at 1, got {lag}")
            if values.size != self.gaps[lag].size:
                raise ValueError(f"lag {lag}: deltas and gaps lengths differ")
        if self.direct.size != self.direct_gaps.size:
            raise ValueError("direct and direct_gaps lengths differ")
        return self

    @property
    def max_lag(self) -> int:
        return max(self.deltas)

    def within(self, xi: float, above: float = 0.0) -> np.ndarray:
        """Differences whose gap lies in (above, xi], all lags pooled."""
        upper = xi * (1.0 + GAP_TOLERANCE)
        lower = above * (1.0 + GAP_TOLERANCE) if above > 0.0 else -np.inf
        chunks = [
            self.deltas[lag][(gap <= upper) & (gap > lower)]
            for lag, gap in sorted(self.gaps.items())
        ]
        return np.concatenate(chunks) if chunks else np.empty(0)


class PilotBandwidth(BaseModel):
    """Gaussian-kernel pilot bandwidth and the rule that produced it."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(..., gt=0.0)
    method: Literal["sheather_jones", "normal_reference"] = "sheather_jones"

    @property
    def fallback(self) -> bool:
        return self.method != "sheather_jones"


class BandwidthConfig(BaseModel):
    """Search settings of the bandwidth selector.

    Attributes
    ----------
    kernel : {"sinc", "gaussian"}
        Deconvolution kernel family.
    h_points : int
        Number of log-spaced bandwidths.
    h_span : tuple of float
        Multipliers of the pilot bandwidth bounding the h grid.
    xi_multipliers : list of float
        Multipliers of the median grid spacing forming the xi grid.
    s_points : int
        Half-line frequency points per inversion.
    x_points : int
        Points of the pilot x grid.
    x_width : float
        Half-width of the pilot x grid in robust scales.
    subset_ratio : float
        Spacing ratio max/min above which only the quarter of pilot samples
        with the smallest spacing is used.
    break_ties : bool
        Perturb tied pilot samples before computing pilot bandwidths.
    seed : int, optional
        Seed of the random pairing k(j) and of the tie perturbation.
    """

    model_config = ConfigDict(frozen=True)

    kernel: KernelFamily = "sinc"
    h_points: int = Field(default=20, ge=2)
    h_span: Tuple[float, float] = (0.1, 10.0)
    xi_multipliers: List[float] = Field(
        default_factory=lambda: [1.0, 2.0, 3.0, 5.0, 8.0]
    )
    s_points: int = Field(default=512, ge=16)
    x_points: int = Field(default=512, ge=16)
    x_width: float = Field(default=6.0, gt=0.0)
    subset_ratio: float = Field(default=1.5, ge=1.0)
    break_ties: bool = False
    seed: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _check_grids(self) -> "BandwidthConfig":
        low, high = self.h_span
        if not 0.0 < low < high:
            raise ValueError("h_span must satisfy 0 < low < high")
        if not self.xi_multipliers or any(m <= 0.0 for m in self.xi_multipliers):
            raise ValueError("xi_multipliers must be positive and nonempty")
        if sorted(self.xi_multipliers) != list(self.xi_multipliers):
            raise ValueError("xi_multipliers must be sorted")
        return self


class BandwidthSelection(BaseModel):
    """Outcome of the two-level search and the ratio extrapolation.

    ``ise_surface[i][k]`` is the level-1 ISE at ``search_grids["h"][i]``
    and ``search_grids["xi"][k]``; infeasible points hold infinity.
    """

    model_config = ConfigDict(frozen=True)

    h1: float = Field(..., gt=0.0)
    xi1: float = Field(..., gt=0.0)
    h2: float = Field(..., gt=0.0)
    h_hat: float = Field(..., gt=0.0)
    xi_hat: float = Field(..., gt=0.0)
    search_grids: Dict[str, List[float]]
    ise_surface: List[List[float]]
    ise_level2: List[float] = Field(default_factory=list)
    pilot_bandwidths: Dict[str, float] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_extrapolation(self) -> "BandwidthSelection":
        if self.h_hat != self.h1**2 / self.h2:
            raise ValueError("h_hat must equal h1^2 / h2")
        if self.xi_hat != self.xi1:
            raise ValueError("xi_hat must equal xi1")
        return self


class OracleResult(BaseModel):
    """Best grid point of an ISE search against a known density."""

    model_config = ConfigDict(frozen=True)

    h: float = Field(..., gt=0.0)
    xi: float = Field(..., gt=0.0)
    ise: float = Field(..., ge=0.0)
    h_grid: List[float]
    xi_grid: List[float]
    ise_surface: List[List[float]]
