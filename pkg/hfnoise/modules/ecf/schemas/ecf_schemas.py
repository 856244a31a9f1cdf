"""Neighborhood and characteristic-function schemas."""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from hfnoise.core.arrays import FloatArray, IntArray

CharFnKind = Literal["error_fU1", "diff_fUtilde"]


class NeighborhoodIndex(BaseModel):
    """Ordered index pairs (j, l) with |t_l - t_j| <= xi and l != j.

    The pair set is symmetric: (j, l) is present exactly when (l, j) is.
    The first half of ``pairs`` holds the pairs with j < l, the second
    half their mirror images.

    Attributes
    ----------
    pairs : np.ndarray
        Integer array of shape (P, 2).
    counts : np.ndarray
        N_j, the number of neighbours of each time point.
    total : int
        N(xi) = sum_j N_j = P.
    xi : float
        Window half-width in years.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    pairs: IntArray
    counts: IntArray
    total: int = Field(..., ge=0)
    xi: float = Field(..., gt=0.0)

    @model_validator(mode="after")
    def _check_totals(self) -> "NeighborhoodIndex":
        if self.pairs.size == 0:
            object.__setattr__(self, "pairs", np.zeros((0, 2), dtype=np.int64))
        elif self.pairs.ndim != 2 or self.pairs.shape[1] != 2:
            raise ValueError("pairs must have shape (P, 2)")
        if self.pairs.shape[0] % 2 != 0:
            raise ValueError("pairs must hold both orientations of every pair")
        if int(self.counts.sum()) != self.total or self.pair_count != self.total:
            raise ValueError("total must equal sum(counts) and the number of pairs")
        return self

    @property
    def pair_count(self) -> int:
        return int(self.pairs.shape[0])

    @property
    def ordered_pairs(self) -> np.ndarray:
        """All ordered pairs as an array of shape (P, 2)."""
        return self.pairs

    @property
    def unordered_pairs(self) -> np.ndarray:
        """The pairs with j < l, shape (P / 2, 2)."""
        ordered = self.ordered_pairs
        return ordered[: ordered.shape[0] // 2]

    @property
    def is_empty(self) -> bool:
        return self.total == 0


class CharFnEstimate(BaseModel):
    """Real characteristic-function estimate on a frequency grid.

    ``kind`` is ``error_fU1`` for the error characteristic function
    estimate and ``diff_fUtilde`` for its square, the estimate for the
    difference of two errors.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    s_grid: FloatArray
    values: FloatArray
    xi: float = Field(..., gt=0.0)
    kind: CharFnKind

    @model_validator(mode="after")
    def _check_values(self) -> "CharFnEstimate":
        if self.s_grid.size != self.values.size:
            raise ValueError("s_grid and values lengths differ")
        if not np.all(np.isfinite(self.s_grid)):
            raise ValueError("s_grid must be finite")
        if np.any(self.values < 0.0) or np.any(self.values > 1.0):
            raise ValueError("characteristic-function values must lie in [0, 1]")
        return self
