"""Deterministic SIR epidemic model and the two risk functions built on it."""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from drccbo.cache import MemoryTableCache, TableCache
from drccbo.core.constants import SirDefaults
from drccbo.core.types import SirCacheHeader
from drccbo.utils.logger import get_logger

logger = get_logger(__name__)

_TABLES = MemoryTableCache()


def _n_steps(t_max: float, dt: float) -> int:
    return int(round(t_max / dt))


def sir_trajectory(beta_contact, gamma_isolation, t_max: float = SirDefaults.T_MAX,
                   dt: float = SirDefaults.DT, s0: float = SirDefaults.S0, i0: float = SirDefaults.I0,
                   r0: float = SirDefaults.R0) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Forward-Euler trajectory of the SIR system on {0, dt, ..., t_max}.

    Args:
        beta_contact: Contact rate (scalar or array)
        gamma_isolation: Isolation rate, broadcast against beta_contact
        t_max: Simulated horizon
        dt: Euler step
        s0: Initial susceptible count
        i0: Initial infected count
        r0: Initial removed count

    Returns:
        (S, I, R) arrays with the time axis first
    """
    beta, gamma = np.broadcast_arrays(np.asarray(beta_contact, dtype=float),
                                      np.asarray(gamma_isolation, dtype=float))
    population = s0 + i0 + r0
    n_steps = _n_steps(t_max, dt)
    shape = (n_steps + 1,) + beta.shape
    s, i, r = np.empty(shape), np.empty(shape), np.empty(shape)
    s[0], i[0], r[0] = s0, i0, r0
    for step in range(n_steps):
        infections = dt * beta * i[step] * s[step] / population
        removals = dt * gamma * i[step]
        s[step + 1] = s[step] - infections
        i[step + 1] = i[step] + infections - removals
        r[step + 1] = r[step] + removals
    return s, i, r


def sir_simulate(beta_contact, gamma_isolation, t_max: float = SirDefaults.T_MAX,
                 dt: float = SirDefaults.DT, s0: float = SirDefaults.S0, i0: float = SirDefaults.I0,
                 r0: float = SirDefaults.R0):
    """Peak number of infected over the time grid (elementwise for arrays)."""
    beta, gamma = np.broadcast_arrays(np.asarray(beta_contact, dtype=float),
                                      np.asarray(gamma_isolation, dtype=float))
    population = s0 + i0 + r0
    s = np.full(beta.shape, s0)
    i = np.full(beta.shape, i0)
    peak = i.copy()
    # same update as sir_trajectory without keeping the history
    for _ in range(_n_steps(t_max, dt)):
        infections = dt * beta * i * s / population
        removals = dt * gamma * i
        s = s - infections
        i = i + infections - removals
        np.maximum(peak, i, out=peak)
    return float(peak) if peak.ndim == 0 else peak


def sir_header(beta_values: np.ndarray, gamma_values: np.ndarray, t_max: float = SirDefaults.T_MAX,
               dt: float = SirDefaults.DT) -> SirCacheHeader:
    return SirCacheHeader(
        beta_lo=float(beta_values[0]), beta_hi=float(beta_values[-1]), n_beta=int(len(beta_values)),
        gamma_lo=float(gamma_values[0]), gamma_hi=float(gamma_values[-1]), n_gamma=int(len(gamma_values)),
        dt=float(dt), t_max=float(t_max),
        s0=SirDefaults.S0, i0=SirDefaults.I0, r0=SirDefaults.R0,
    )


def infected_table(beta_values: np.ndarray, gamma_values: np.ndarray,
                   cache: Optional[TableCache] = None) -> np.ndarray:
    """
    Peak infected count at every (beta, gamma) pair, shape (n_beta, n_gamma).

    Args:
        beta_values: Contact rates
        gamma_values: Isolation rates
        cache: Optional persistent cache consulted before simulating

    Returns:
        Read-only table
    """
    beta_values = np.asarray(beta_values, dtype=float)
    gamma_values = np.asarray(gamma_values, dtype=float)
    header = sir_header(beta_values, gamma_values)

    def simulate() -> np.ndarray:
        if cache is not None:
            return cache.get_or_compute(header, compute)
        return compute()

    def compute() -> np.ndarray:
        logger.info(f"Simulating SIR table ({beta_values.size}x{gamma_values.size} grid)")
        beta, gamma = np.meshgrid(beta_values, gamma_values, indexing="ij")
        return sir_simulate(beta, gamma)

    return _TABLES.get_or_compute(header, simulate)


@dataclass(frozen=True, eq=False)
class RiskTables:
    """Shifted risk tables over the (beta, gamma) grid and their shift constants."""
    r1: np.ndarray
    r2: np.ndarray
    c1: float
    c2: float


def _midrange(table: np.ndarray) -> float:
    return float((table.max() + table.min()) / 2.0)


def risk_functions(beta_values: np.ndarray, gamma_values: np.ndarray,
                   infected: Optional[np.ndarray] = None,
                   cache: Optional[TableCache] = None) -> RiskTables:
    """
    Economic (R1) and infection (R2) risks, each shifted so that max = -min.

    Args:
        beta_values: Contact rates (rows)
        gamma_values: Isolation rates (columns)
        infected: Precomputed peak-infected table; simulated when omitted
        cache: Cache used when the table has to be simulated

    Returns:
        RiskTables
    """
    beta_values = np.asarray(beta_values, dtype=float)
    gamma_values = np.asarray(gamma_values, dtype=float)
    if infected is None:
        infected = infected_table(beta_values, gamma_values, cache)
    beta, gamma = np.meshgrid(beta_values, gamma_values, indexing="ij")
    economic = infected - SirDefaults.ECONOMIC_BETA_WEIGHT * beta + SirDefaults.ECONOMIC_GAMMA_WEIGHT * gamma
    c1 = _midrange(economic)
    c2 = _midrange(infected)
    return RiskTables(r1=economic - c1, r2=infected - c2, c1=c1, c2=c2)
