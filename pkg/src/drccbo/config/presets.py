"""Parameter rows of the benchmark experiments.

Every preset is a plain mapping in the shape of ExperimentConfig, so a config
file can leave out whole blocks and inherit them from the preset of its problem.
"""

from typing import Any, Dict

from drccbo.core.constants import (
    BetaModes, EpsilonModes, EtaModes, Methods, Problems, Settings, SirDefaults, SyntheticDefaults,
)
from drccbo.core.exceptions import ConfigurationError


def _kernel(signal_variance: float, length_scale: float, noise_variance: float) -> Dict[str, float]:
    return {
        "signal_variance": signal_variance,
        "length_scale": length_scale,
        "noise_variance": noise_variance,
    }


def _fixed_beta(sqrt_beta_f: float, sqrt_beta_g: float) -> Dict[str, Any]:
    return {"mode": BetaModes.FIXED, "sqrt_beta_f": sqrt_beta_f, "sqrt_beta_g": sqrt_beta_g}


_SYNTHETIC = {
    "kernel_f": _kernel(SyntheticDefaults.SIGNAL_VARIANCE_F, SyntheticDefaults.LENGTH_SCALE_F,
                        SyntheticDefaults.NOISE_VARIANCE_F),
    "kernel_g": _kernel(SyntheticDefaults.SIGNAL_VARIANCE_G, SyntheticDefaults.LENGTH_SCALE_G,
                        SyntheticDefaults.NOISE_VARIANCE_G),
    "beta": _fixed_beta(SyntheticDefaults.SQRT_BETA_F, SyntheticDefaults.SQRT_BETA_G),
    "threshold_h": SyntheticDefaults.THRESHOLD_H,
    "alpha": SyntheticDefaults.ALPHA,
    "iterations": SyntheticDefaults.ITERATIONS,
}

# Cases 1/2 and 3/4 share a parameter row; only the role of R1 and R2 differs.
_SIR_ROW_A = {
    "kernel_f": _kernel(5000.0, 0.1, 1e-8),
    "kernel_g": _kernel(1e5, 0.01, 1e-4),
    "beta": _fixed_beta(3.0, 2.0),
    "threshold_h": 320.0,
    "alpha": 0.85,
    "iterations": SirDefaults.ITERATIONS,
}

_SIR_ROW_B = {
    "kernel_f": _kernel(1e4, 0.1, 1e-3),
    "kernel_g": _kernel(1e5, 0.1, 1e-3),
    "beta": _fixed_beta(2.0, 3.0),
    "threshold_h": 100.0,
    "alpha": 0.69,
    "iterations": SirDefaults.ITERATIONS,
}

# Small problem drawn from the GP prior, run with the theoretical schedules.
_GP_PRIOR = {
    "kernel_f": _kernel(1.0, 4.0, 1e-4),
    "kernel_g": _kernel(1.0, 4.0, 1e-4),
    "beta": {"mode": BetaModes.THEORETICAL},
    "eta_mode": EtaModes.THEORETICAL,
    "threshold_h": 0.0,
    "alpha": 0.5,
    "xi": 0.2,
    "delta": 0.1,
    "iterations": 400,
    "grid": {"x_lo": -3.0, "x_hi": 3.0, "n_x": 15, "w_lo": -3.0, "w_hi": 3.0, "n_w": 10},
}

PRESETS: Dict[str, Dict[str, Any]] = {
    Problems.SYNTHETIC: _SYNTHETIC,
    Problems.SIR_CASE1: _SIR_ROW_A,
    Problems.SIR_CASE2: _SIR_ROW_A,
    Problems.SIR_CASE3: _SIR_ROW_B,
    Problems.SIR_CASE4: _SIR_ROW_B,
    Problems.GP_PRIOR: _GP_PRIOR,
}


def preset_fields(problem: str, setting: str = Settings.SIMULATOR) -> Dict[str, Any]:
    """
    Config fields of the benchmark row for a problem.

    Args:
        problem: Problem tag
        setting: Setting tag

    Returns:
        Fresh dict of ExperimentConfig fields

    Raises:
        ConfigurationError: If the problem or setting is unknown
    """
    if problem not in PRESETS:
        raise ConfigurationError(f"unknown problem '{problem}'", "problem")
    if setting not in Settings.ALL:
        raise ConfigurationError(f"unknown setting '{setting}'", "setting")

    fields = {
        "problem": problem,
        "setting": setting,
        "method": Methods.PROPOSED,
        "eta_mode": EtaModes.ZERO,
        "xi": SyntheticDefaults.XI,
        "epsilon": {"mode": EpsilonModes.FIXED, "value": SyntheticDefaults.EPSILON},
    }
    # deep-enough copy: nested blocks are one level of plain dicts
    fields.update({key: dict(value) if isinstance(value, dict) else value
                   for key, value in PRESETS[problem].items()})
    return fields
