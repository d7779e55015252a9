"""Custom exception hierarchy for drcc-bo."""

from pathlib import Path
from typing import Any, Dict, List, Optional


class DrccBoError(Exception):
    """Base exception for all library errors."""
    pass


class ConfigurationError(DrccBoError):
    """Configuration is invalid or incomplete."""

    def __init__(self, message: str, setting: Optional[str] = None):
        """
        Initialize configuration error.

        Args:
            message: Error message
            setting: Name of problematic setting
        """
        self.setting = setting

        full_message = message
        if setting:
            full_message = f"Configuration error for '{setting}': {message}"

        super().__init__(full_message)


class NumericalError(DrccBoError):
    """A numerical routine failed (e.g. a Gram matrix that stays indefinite after jitter)."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        """
        Initialize numerical error.

        Args:
            message: Error message
            context: Extra key/value pairs (iteration, matrix size, ...) appended to the message
        """
        self.message = message
        self.context = dict(context or {})

        full_message = message
        if self.context:
            context_str = ", ".join(f"{k}={v}" for k, v in self.context.items())
            full_message = f"{message} ({context_str})"

        super().__init__(full_message)

    def with_context(self, **kwargs) -> 'NumericalError':
        """Return a copy of this error carrying additional context."""
        return NumericalError(self.message, {**self.context, **kwargs})


class DimensionMismatchError(DrccBoError):
    """Two objects indexed by the same set disagree on its size."""

    def __init__(self, expected: int, actual: int, what: str = "vector"):
        self.expected = expected
        self.actual = actual
        self.what = what
        super().__init__(f"Dimension mismatch for {what}: expected {expected}, got {actual}")


class InternalInconsistencyError(DrccBoError):
    """A state that the classification rules exclude was observed."""
    pass


class SelectionError(DrccBoError):
    """No admissible candidate for a selection rule."""
    pass


class ReplicationError(DrccBoError):
    """One replication of a batch failed."""

    def __init__(self, rep_index: int, seed: int, cause: BaseException):
        """
        Initialize replication error.

        Args:
            rep_index: Index of the failed replication
            seed: Seed the replication ran with
            cause: Underlying exception
        """
        self.rep_index = rep_index
        self.seed = seed
        self.cause = cause
        super().__init__(f"Replication {rep_index} (seed {seed}) failed: {cause}")


class CacheError(DrccBoError):
    """Cache operation failed."""

    def __init__(self, message: str, operation: Optional[str] = None,
                 key: Optional[str] = None):
        """
        Initialize cache error.

        Args:
            message: Error message
            operation: Cache operation that failed (e.g., "get", "set")
            key: Cache key involved
        """
        self.operation = operation
        self.key = key

        full_message = message
        if operation:
            full_message = f"Cache {operation} failed: {message}"
        if key:
            full_message = f"{full_message} (key: {key})"

        super().__init__(full_message)


class ExportError(DrccBoError):
    """Export operation failed."""

    def __init__(self, message: str, output_path: Optional[Path] = None,
                 format_type: Optional[str] = None):
        """
        Initialize export error.

        Args:
            message: Error message
            output_path: Path where export was attempted
            format_type: Format being exported (e.g., "CSV", "SVG")
        """
        self.output_path = output_path
        self.format_type = format_type

        full_message = message
        if format_type:
            full_message = f"{format_type} export failed: {message}"
        if output_path:
            full_message = f"{full_message} (path: {output_path})"

        super().__init__(full_message)


class ValidationError(DrccBoError):
    """Run output failed validation."""

    def __init__(self, message: str, object_type: Optional[str] = None,
                 errors: Optional[List[str]] = None):
        self.object_type = object_type
        self.errors = errors or []

        full_message = message
        if object_type:
            full_message = f"{object_type} validation failed: {message}"
        if self.errors:
            error_list = "\n  - ".join(self.errors)
            full_message = f"{full_message}\n  Errors:\n  - {error_list}"

        super().__init__(full_message)
