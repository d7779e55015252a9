"""Type definitions for commonly used dict structures."""

from typing import Dict, Optional, TypedDict


class SirCacheHeader(TypedDict):
    """Header of a cached SIR table; a mismatch invalidates the cache."""
    beta_lo: float
    beta_hi: float
    n_beta: int
    gamma_lo: float
    gamma_hi: float
    n_gamma: int
    dt: float
    t_max: float
    s0: float
    i0: float
    r0: float


class CurveRow(TypedDict):
    """One row of summary.csv."""
    method: str
    setting: str
    problem: str
    iteration: int
    mean_utility_gap: float
    n_reps: int


class TraceRow(TypedDict):
    """One row of trace_<rep>.csv."""
    t: int
    x_index: Optional[int]
    w_index: Optional[int]
    y_f: Optional[float]
    y_g: Optional[float]
    n_H: int
    n_L: int
    n_M: int
    c_best: float
    recommend_index: Optional[int]
    utility_gap: float
    status: str


StatusCounts = Dict[str, int]
