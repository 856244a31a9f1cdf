"""Pydantic field type for read-only float arrays."""

from typing import Annotated, Any

import numpy as np
from pydantic import BeforeValidator, PlainSerializer


def _to_float_array(value: Any) -> np.ndarray:
    array = np.array(value, dtype=float, copy=True)
    if array.ndim != 1:
        raise ValueError(f"expected a one-dimensional array, got shape {array.shape}")
    array.setflags(write=False)
    return array


FloatArray = Annotated[
    np.ndarray,
    BeforeValidator(_to_float_array),
    PlainSerializer(lambda array: array.tolist(), return_type=list),
]


def _to_int_array(value: Any) -> np.ndarray:
    array = np.array(value, dtype=np.int64, copy=True)
    array.setflags(write=False)
    return array


IntArray = Annotated[
    np.ndarray,
    BeforeValidator(_to_int_array),
    PlainSerializer(lambda array: array.tolist(), return_type=list),
]
