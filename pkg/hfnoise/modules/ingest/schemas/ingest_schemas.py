"""Raw tick record schema."""

from datetime import datetime
from typing import Optional

from pydantic import BaseModel, Field


class RawTickRecord(BaseModel):
    """One trade as delivered, before any cleaning.

    No constraint is placed on the fields: invalid prices and codes are
    removed by the cleaning step, not rejected at construction.

    Attributes
    ----------
    timestamp : datetime
        Wall-clock time of the trade (exchange local time).
    price : float
        Trade price.
    condition_code : str, optional
        Sale condition letter code.
    correlation_indicator : int, optional
        Correction indicator; negative values mark invalid records.
    """

    timestamp: datetime = Field(..., description="Wall-clock trade time")
    price: float = Field(..., description="Trade price")
    condition_code: Optional[str] = Field(default=None, description="COND letter code")
    correlation_indicator: Optional[int] = Field(
        default=None, description="CORR indicator"
    )
