"""In-memory table cache."""

import threading
from collections import OrderedDict
from typing import Callable, Mapping, Optional

import numpy as np

from drccbo.cache.table_cache import TableCache, header_key


class MemoryTableCache(TableCache):
    """LRU cache of read-only tables shared by the threads of one process."""

    def __init__(self, max_size: int = 16):
        """
        Initialize memory cache.

        Args:
            max_size: Maximum number of tables kept
        """
        self.max_size = max_size
        self._tables: "OrderedDict[str, np.ndarray]" = OrderedDict()
        self._lock = threading.RLock()

    def load(self, header: Mapping) -> Optional[np.ndarray]:
        key = header_key(header)
        with self._lock:
            if key not in self._tables:
                return None
            self._tables.move_to_end(key)
            return self._tables[key]

    def store(self, header: Mapping, table: np.ndarray) -> None:
        table = np.array(table, dtype=float)
        table.setflags(write=False)
        with self._lock:
            self._tables[header_key(header)] = table
            self._tables.move_to_end(header_key(header))
            while len(self._tables) > self.max_size:
                # Remove least recently used
                self._tables.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._tables.clear()

    def get_or_compute(self, header: Mapping, compute_fn: Callable[[], np.ndarray]) -> np.ndarray:
        # one computation per header even when replications race for it
        with self._lock:
            super().get_or_compute(header, compute_fn)
            return self.load(header)

    def __len__(self) -> int:
        return len(self._tables)
