"""Schemas of the frequency-domain volatility estimator."""

import math
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from hfnoise.core.arrays import FloatArray

_IDENTITY_TOLERANCE = 1e-12


class MultiscaleWeights(BaseModel):
    """Scales and weights combining lagged characteristic functions.

    Attributes
    ----------
    n : int
        Number of increments of the series.
    N : int
        Number of scales, floor(sqrt(n + 1)).
    K : list of int
        Scales K_m = m, m = 1..N.
    a : list of float
        Weights a_m = 12 K_m (m - N/2 - 1/2) / {N (N^2 - 1)}.
    zeta : float
        Edge correction K_1 K_2 / {(n + 1)(K_2 - K_1)} = 2 / (n + 1).
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    N: int = Field(..., ge=2)
    K: List[int]
    a: List[float]
    zeta: float = Field(..., gt=0.0)

    @model_validator(mode="after")
    def _check_identities(self) -> "MultiscaleWeights":
        if len(self.K) != self.N or len(self.a) != self.N:
            raise ValueError("K and a must have N entries")
        if abs(math.fsum(self.a) - 1.0) > _IDENTITY_TOLERANCE:
            raise ValueError("weights must sum to one")
        if abs(math.fsum(w / k for w, k in zip(self.a, self.K))) > _IDENTITY_TOLERANCE:
            raise ValueError("weights divided by scales must sum to zero")
        expected = self.K[0] * self.K[1] / ((self.n + 1) * (self.K[1] - self.K[0]))
        if not math.isclose(self.zeta, expected, rel_tol=1e-12):
            raise ValueError(f"zeta must equal {expected}")
        return self


class SGridSelection(BaseModel):
    """Regression abscissae s_1..s_m in (0, S].

    ``degenerate`` is set when the threshold is already missed at the first
    scanned frequency, in which case S is that frequency.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    s_points: FloatArray
    S: float = Field(..., gt=0.0)
    degenerate: bool = False


class VolatilityResult(BaseModel):
    """Integrated-volatility estimate and its realized-volatility baseline.

    Attributes
    ----------
    beta_hat : float
        Estimate of the integrated variance; reported unclamped.
    s_points : np.ndarray
        Regression abscissae, strictly increasing and positive.
    xi : float
        Window of the difference characteristic function.
    rv_baseline : float
        Sum of squared first differences.
    S : float
        Upper end of the s grid.
    flagged_negative : bool
        True when ``beta_hat`` < 0.
    degenerate : bool
        True when the s grid collapsed to the first scan step.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    beta_hat: float
    s_points: FloatArray
    xi: float = Field(..., gt=0.0)
    rv_baseline: float = Field(..., ge=0.0)
    S: float = Field(..., gt=0.0)
    flagged_negative: bool = False
    degenerate: bool = False

    @model_validator(mode="after")
    def _check_points(self) -> "VolatilityResult":
        if self.s_points.size == 0:
            raise ValueError("s_points must not be empty")
        if self.s_points[0] <= 0.0 or np.any(np.diff(self.s_points) <= 0.0):
            raise ValueError("s_points must be positive and strictly increasing")
        return self

    @property
    def m(self) -> int:
        return int(self.s_points.size)
