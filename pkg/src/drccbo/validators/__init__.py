"""Validation modules for run outputs."""

from drccbo.validators.trace_validator import ValidatedTraceRow, ValidationResult, validate_trace

__all__ = ['ValidatedTraceRow', 'ValidationResult', 'validate_trace']
