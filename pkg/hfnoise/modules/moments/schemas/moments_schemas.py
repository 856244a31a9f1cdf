"""Noise moment schemas."""

from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator

MAX_MOMENT_ORDER = 8


class MomentSet(BaseModel):
    """Even moments of the error difference and of the error itself.

    Attributes
    ----------
    xi : float
        Window used for the neighborhood differences.
    m_tilde : list of float
        M_Utilde,2k for k = 1..kmax.
    m_u : list of float
        M_U,2k for k = 1..kmax. Higher entries may be negative in small
        samples; they are kept as computed.
    """

    model_config = ConfigDict(frozen=True)

    xi: float = Field(..., gt=0.0)
    m_tilde: List[float] = Field(..., min_length=1, max_length=MAX_MOMENT_ORDER)
    m_u: List[float] = Field(..., min_length=1, max_length=MAX_MOMENT_ORDER)

    @model_validator(mode="after")
    def _check_moments(self) -> "MomentSet":
        if len(self.m_tilde) != len(self.m_u):
            raise ValueError("m_tilde and m_u must have the same length")
        if any(value < 0.0 for value in self.m_tilde):
            raise ValueError("even moments of differences cannot be negative")
        if self.m_tilde[0] != 2.0 * self.m_u[0]:
            raise ValueError("m_tilde[0] must equal 2 * m_u[0]")
        return self

    @property
    def kmax(self) -> int:
        return len(self.m_u)

    @property
    def variance(self) -> float:
        """Estimated noise variance M_U,2."""
        return self.m_u[0]
