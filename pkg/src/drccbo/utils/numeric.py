"""Small numeric helpers with the library's lowest-index tie-breaking."""

from typing import Optional

import numpy as np

from drccbo.core.exceptions import SelectionError


def first_argmax(values, mask: Optional[np.ndarray] = None) -> int:
    """Index of the maximum (first occurrence), optionally restricted to `mask`.

    Raises SelectionError when the mask selects nothing.
    """
    values = np.asarray(values, dtype=float)
    if mask is None:
        return int(np.argmax(values))
    mask = np.asarray(mask, dtype=bool)
    if not mask.any():
        raise SelectionError("empty candidate set")
    candidates = np.flatnonzero(mask)
    return int(candidates[np.argmax(values[candidates])])


def first_argmin(values) -> int:
    return int(np.argmin(np.asarray(values, dtype=float)))


def format_float(value: Optional[float]) -> str:
    """Shortest round-trip text for a double; empty for missing values."""
    if value is None:
        return ""
    return repr(float(value))
