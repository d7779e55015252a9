"""Trace validation using Pydantic models."""

from dataclasses import dataclass, field
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError, model_validator

from drccbo.core.constants import StopStatuses
from drccbo.core.exceptions import ValidationError
from drccbo.core.models import RunTrace, TraceRecord
from drccbo.utils.logger import get_logger

logger = get_logger(__name__)


# ============================================================================
# Pydantic Models for Validation
# ============================================================================

class ValidatedTraceRow(BaseModel):
    """One trace row; terminal rows carry no evaluation."""
    model_config = ConfigDict(extra="forbid")

    t: int = Field(..., ge=1)
    x_index: Optional[int] = Field(None, ge=0)
    w_index: Optional[int] = Field(None, ge=0)
    y_f: Optional[float] = None
    y_g: Optional[float] = None
    n_H: int = Field(..., ge=0)
    n_L: int = Field(..., ge=0)
    n_M: int = Field(..., ge=0)
    c_best: float
    recommend_index: Optional[int] = Field(None, ge=0)
    utility_gap: float = Field(..., ge=0, allow_inf_nan=False)
    status: str = Field(..., pattern=r'^(continue|no_solution|converged)$')

    @model_validator(mode="after")
    def check_evaluation(self) -> 'ValidatedTraceRow':
        evaluated = [self.x_index, self.w_index, self.y_f, self.y_g]
        if self.status == StopStatuses.CONTINUE and any(v is None for v in evaluated):
            raise ValueError("non-terminal row without an evaluation")
        if self.status != StopStatuses.CONTINUE and any(v is not None for v in evaluated):
            raise ValueError("terminal row with an evaluation")
        if self.status == StopStatuses.CONVERGED and self.recommend_index is None:
            raise ValueError("converged row without a recommendation")
        return self


# ============================================================================
# Validation Results
# ============================================================================

@dataclass
class ValidationResult:
    """Results from trace validation."""
    valid: bool = True
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    validated_count: int = 0

    def add_error(self, message: str):
        """Add an error message."""
        self.errors.append(message)
        self.valid = False

    def add_warning(self, message: str):
        self.warnings.append(message)

    def merge(self, other: 'ValidationResult'):
        """Merge another validation result into this one."""
        self.errors.extend(other.errors)
        self.warnings.extend(other.warnings)
        self.validated_count += other.validated_count
        if not other.valid:
            self.valid = False

    def raise_if_invalid(self, object_type: str = "RunTrace"):
        if not self.valid:
            raise ValidationError(f"{len(self.errors)} problem(s)", object_type, self.errors)


def _record_to_dict(record: TraceRecord) -> dict:
    return {
        't': record.t,
        'x_index': record.x_index,
        'w_index': record.w_index,
        'y_f': record.y_f,
        'y_g': record.y_g,
        'n_H': record.n_high,
        'n_L': record.n_low,
        'n_M': record.n_maybe,
        'c_best': record.c_best,
        'recommend_index': record.recommendation,
        'utility_gap': record.utility_gap,
        'status': record.status.value,
    }


def validate_trace(trace: RunTrace, n_designs: int, budget: int) -> ValidationResult:
    """
    Validate one run trace.

    Args:
        trace: Trace to check
        n_designs: |X|
        budget: Iteration budget of the run

    Returns:
        ValidationResult with one error per violated row property
    """
    result = ValidationResult()
    if len(trace) > budget:
        result.add_error(f"trace has {len(trace)} rows, budget is {budget}")

    for position, record in enumerate(trace.records):
        result.validated_count += 1
        where = f"row {position} (t={record.t})"
        try:
            row = ValidatedTraceRow(**_record_to_dict(record))
        except PydanticValidationError as e:
            for error in e.errors():
                result.add_error(f"{where}: {error['msg']} at {error['loc']}")
            continue

        if row.t != position + 1:
            result.add_error(f"{where}: iterations must be numbered consecutively from 1")
        if row.n_H + row.n_L + row.n_M != n_designs:
            result.add_error(f"{where}: |H|+|L|+|M| = {row.n_H + row.n_L + row.n_M}, expected {n_designs}")
        for name in ('x_index', 'recommend_index'):
            value = getattr(row, name)
            if value is not None and value >= n_designs:
                result.add_error(f"{where}: {name} {value} outside the design set")
        if row.status != StopStatuses.CONTINUE and position != len(trace.records) - 1:
            result.add_error(f"{where}: terminal status '{row.status}' before the last row")

    if result.errors:
        logger.warning(f"Trace validation found {len(result.errors)} error(s)")
    return result
