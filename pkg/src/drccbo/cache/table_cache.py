"""Abstract cache for precomputed numeric tables keyed by their generating parameters."""

import hashlib
import json
from abc import ABC, abstractmethod
from typing import Callable, Mapping, Optional

import numpy as np


def header_key(header: Mapping) -> str:
    """Stable digest of a table header (key order does not matter)."""
    canonical = json.dumps(dict(header), sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class TableCache(ABC):
    """Abstract base class for table cache implementations."""

    @abstractmethod
    def load(self, header: Mapping) -> Optional[np.ndarray]:
        """
        Get the table generated with `header`.

        Args:
            header: Parameters the table was generated with

        Returns:
            Cached table or None if absent or generated with other parameters
        """

    @abstractmethod
    def store(self, header: Mapping, table: np.ndarray) -> None:
        """
        Store a table together with its header.

        Args:
            header: Parameters the table was generated with
            table: Table values
        """

    @abstractmethod
    def clear(self) -> None:
        """Drop every cached table."""

    def get_or_compute(self, header: Mapping, compute_fn: Callable[[], np.ndarray]) -> np.ndarray:
        """
        Get table from cache or compute and cache it.

        Args:
            header: Parameters of the table
            compute_fn: Function producing the table when it is not cached

        Returns:
            Cached or computed table
        """
        table = self.load(header)
        if table is None:
            table = np.asarray(compute_fn(), dtype=float)
            self.store(header, table)
        return table
