"""Cache management modules."""

from drccbo.cache.file_cache import FileTableCache
from drccbo.cache.memory_cache import MemoryTableCache
from drccbo.cache.table_cache import TableCache, header_key

__all__ = ['TableCache', 'MemoryTableCache', 'FileTableCache', 'header_key']
