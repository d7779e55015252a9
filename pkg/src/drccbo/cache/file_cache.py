"""Single-table cache persisted as a JSON document with a parameter header."""

import json
import os
from pathlib import Path
from typing import Mapping, Optional

import numpy as np

from drccbo.cache.table_cache import TableCache
from drccbo.core.exceptions import CacheError
from drccbo.utils.logger import get_logger

logger = get_logger(__name__)


class FileTableCache(TableCache):
    """
    Table stored at one path as {"header": {...}, "values": [[...], ...]}.

    A header that differs from the requested one makes the file stale; the next
    store overwrites it.
    """

    def __init__(self, path: Path):
        self.path = Path(path)

    def read_header(self) -> Optional[dict]:
        document = self._read()
        return None if document is None else document.get("header")

    def _read(self) -> Optional[dict]:
        if not self.path.is_file():
            return None
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"Ignoring unreadable table cache {self.path}: {e}")
            return None

    def load(self, header: Mapping) -> Optional[np.ndarray]:
        document = self._read()
        if document is None:
            return None
        if document.get("header") != dict(header):
            logger.info(f"Table cache {self.path} was built with other parameters, regenerating")
            return None
        try:
            return np.asarray(document["values"], dtype=float)
        except (KeyError, TypeError, ValueError) as e:
            logger.warning(f"Malformed table cache {self.path}: {e}")
            return None

    def store(self, header: Mapping, table: np.ndarray) -> None:
        document = {"header": dict(header), "values": np.asarray(table, dtype=float).tolist()}
        temporary = self.path.with_name(self.path.name + ".tmp")
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(temporary, "w", encoding="utf-8", newline="\n") as f:
                json.dump(document, f)
                f.write("\n")
            os.replace(temporary, self.path)
        except OSError as e:
            raise CacheError(str(e), "store", str(self.path)) from e
        logger.info(f"Wrote table cache {self.path}")

    def clear(self) -> None:
        try:
            self.path.unlink(missing_ok=True)
        except OSError as e:
            raise CacheError(str(e), "clear", str(self.path)) from e
