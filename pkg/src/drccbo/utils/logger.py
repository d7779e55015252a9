"""Structured logging for drcc-bo runs."""

import logging
import sys
from typing import Any, Dict, MutableMapping, Optional, Tuple

from drccbo.core.constants import LogLevels

DEFAULT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DEFAULT_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

_configured = False


def setup_logging(level: str = LogLevels.INFO,
                  format_string: Optional[str] = None,
                  date_format: Optional[str] = None):
    """
    Configure the root logger once per process.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format_string: Custom format string for log messages
        date_format: Custom date format string
    """
    global _configured
    if _configured:
        return

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=format_string or DEFAULT_FORMAT,
        datefmt=date_format or DEFAULT_DATE_FORMAT,
        stream=sys.stdout
    )
    # numerical libraries are chatty at DEBUG
    logging.getLogger("matplotlib").setLevel(logging.WARNING)
    _configured = True


class ContextLogger(logging.LoggerAdapter):
    """Logger that appends its run context as `[method=... | seed=... | t=...]`."""

    def process(self, msg: Any, kwargs: MutableMapping[str, Any]) -> Tuple[Any, MutableMapping[str, Any]]:
        if not self.extra:
            return msg, kwargs
        context_str = " | ".join(f"{k}={v}" for k, v in self.extra.items())
        return f"{msg} [{context_str}]", kwargs

    def with_context(self, **kwargs) -> 'ContextLogger':
        """New logger with kwargs merged into this logger's context."""
        return ContextLogger(self.logger, {**self.extra, **kwargs})


def get_logger(name: str, context: Optional[Dict[str, Any]] = None) -> ContextLogger:
    return ContextLogger(logging.getLogger(name), dict(context or {}))
