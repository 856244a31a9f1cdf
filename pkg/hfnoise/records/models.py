"""Flat result records emitted by the estimators.

Each record is one row of a JSON or CSV result file.
"""

from typing import Optional

from pydantic import BaseModel, Field


class DensityRecord(BaseModel):
    """ISE of one density estimate."""

    delta_s: Optional[int] = Field(
        default=None, description="Sampling interval in seconds"
    )
    model: Optional[str] = Field(default=None, description="Heston parameter set")
    noise: Optional[str] = Field(default=None, description="Error law family")
    kernel: str = Field(..., description="Deconvolution kernel")
    h: float = Field(..., gt=0.0, description="Bandwidth")
    xi: float = Field(..., gt=0.0, description="Neighborhood window")
    ise: Optional[float] = Field(
        default=None, ge=0.0, description="Integrated squared error"
    )


class MomentRecord(BaseModel):
    """Estimated noise moment of order 2k."""

    xi: float = Field(..., gt=0.0)
    k: int = Field(..., ge=1)
    m_tilde: float = Field(..., ge=0.0)
    m_u: float
    truth: Optional[float] = Field(default=None, description="True M_U,2k when known")

    @property
    def relative_deviation(self) -> Optional[float]:
        if self.truth is None or self.truth == 0.0:
            return None
        return (self.m_u - self.truth) / self.truth


class VolatilityRecord(BaseModel):
    """Integrated-volatility estimate with its baseline."""

    beta_hat: float
    rv_baseline: float = Field(..., ge=0.0)
    xi: float = Field(..., gt=0.0)
    m: int = Field(..., ge=1)
    S: float = Field(..., gt=0.0)
    flagged_negative: bool = False
    truth: Optional[float] = Field(default=None, description="True integrated variance")

    @property
    def relative_deviation(self) -> Optional[float]:
        if self.truth is None or self.truth == 0.0:
            return None
        return (self.beta_hat - self.truth) / self.truth


class BandwidthRecord(BaseModel):
    """Selected bandwidth and window."""

    h1: float = Field(..., gt=0.0)
    xi1: float = Field(..., gt=0.0)
    h2: float = Field(..., gt=0.0)
    h_hat: float = Field(..., gt=0.0)
    xi_hat: float = Field(..., gt=0.0)
