"""Configuration management for drcc-bo experiments."""

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Literal, Mapping, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from drccbo.core.constants import (
    BaselineDefaults, BetaModes, EnvVars, EpsilonModes, EtaModes, LogLevels, Methods, Problems,
    Settings,
)
from drccbo.core.exceptions import ConfigurationError
from drccbo.core.models import GridSpace, KernelParams


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class KernelSettings(_Strict):
    """Gaussian kernel and observation noise of one black-box function."""
    signal_variance: float = Field(..., gt=0)
    length_scale: float = Field(..., gt=0)
    noise_variance: float = Field(..., gt=0)

    def to_params(self) -> KernelParams:
        return KernelParams(self.signal_variance, self.length_scale, self.noise_variance)


class BetaSettings(_Strict):
    """Confidence width schedule: theoretical log schedule or fixed square roots."""
    mode: Literal["theoretical", "fixed"] = BetaModes.FIXED
    sqrt_beta_f: Optional[float] = Field(None, ge=0)
    sqrt_beta_g: Optional[float] = Field(None, ge=0)

    @model_validator(mode="after")
    def check_fixed_values(self) -> 'BetaSettings':
        if self.mode == BetaModes.FIXED and (self.sqrt_beta_f is None or self.sqrt_beta_g is None):
            raise ValueError("fixed beta mode requires both sqrt_beta_f and sqrt_beta_g")
        return self


class EpsilonSettings(_Strict):
    """Ambiguity radius: a fixed value or the decaying data-driven schedule."""
    mode: Literal["fixed", "schedule"] = EpsilonModes.FIXED
    value: float = Field(0.15, ge=0)


class GridSettings(_Strict):
    """Equally spaced design and environment grids."""
    x_lo: float
    x_hi: float
    n_x: int = Field(..., ge=2)
    w_lo: float
    w_hi: float
    n_w: int = Field(..., ge=2)

    @model_validator(mode="after")
    def check_bounds(self) -> 'GridSettings':
        if not self.x_lo < self.x_hi:
            raise ValueError("x_lo must be below x_hi")
        if not self.w_lo < self.w_hi:
            raise ValueError("w_lo must be below w_hi")
        return self

    def to_grid(self) -> GridSpace:
        from drccbo.problems.benchmarks import make_grid
        return GridSpace(make_grid(self.x_lo, self.x_hi, self.n_x),
                         make_grid(self.w_lo, self.w_hi, self.n_w))


class BaselineSettings(_Strict):
    """Knobs of the DRPTR and CCBO comparison policies."""
    drptr_gamma: float = Field(BaselineDefaults.DRPTR_GAMMA, ge=0)
    drptr_zeta: Optional[float] = Field(None, gt=0)
    ccbo_mc_samples: int = Field(BaselineDefaults.CCBO_MC_SAMPLES, ge=1)

    def zeta(self, omega_size: int) -> float:
        """Approximation budget; defaults to 0.005 (|Omega| + 1)."""
        if self.drptr_zeta is not None:
            return self.drptr_zeta
        return 0.005 * (omega_size + 1)


class ExperimentConfig(_Strict):
    """One experiment: problem, setting, method and every algorithm parameter."""
    problem: str = Problems.SYNTHETIC
    setting: str = Settings.SIMULATOR
    method: str = Methods.PROPOSED
    kernel_f: KernelSettings
    kernel_g: KernelSettings
    threshold_h: float
    alpha: float = Field(..., gt=0, lt=1)
    xi: float = Field(1e-12, gt=0)
    eta_mode: Literal["zero", "theoretical"] = EtaModes.ZERO
    beta: BetaSettings = BetaSettings(mode=BetaModes.THEORETICAL)
    epsilon: EpsilonSettings = EpsilonSettings()
    delta: float = Field(0.1, gt=0, lt=1)
    iterations: int = Field(..., ge=1)
    replications: int = Field(1, ge=1)
    seed: int = Field(0, ge=0)
    output_dir: Path = Path("results")
    grid: Optional[GridSettings] = None
    baseline: BaselineSettings = BaselineSettings()
    problem_seed: Optional[int] = Field(None, ge=0)
    cc_alpha_shift: bool = False

    @field_validator("problem")
    @classmethod
    def check_problem(cls, v: str) -> str:
        if v not in Problems.ALL:
            raise ValueError(f"unknown problem '{v}' (expected one of {', '.join(Problems.ALL)})")
        return v

    @field_validator("setting")
    @classmethod
    def check_setting(cls, v: str) -> str:
        if v not in Settings.ALL:
            raise ValueError(f"unknown setting '{v}' (expected one of {', '.join(Settings.ALL)})")
        return v

    @field_validator("method")
    @classmethod
    def check_method(cls, v: str) -> str:
        if v not in Methods.ALL:
            raise ValueError(f"unknown method '{v}' (expected one of {', '.join(Methods.ALL)})")
        return v

    @model_validator(mode="after")
    def check_alpha_shift(self) -> 'ExperimentConfig':
        if self.cc_alpha_shift and self.alpha - self.xi <= 0:
            raise ValueError("cc_alpha_shift requires alpha > xi")
        return self

    @property
    def uncontrollable(self) -> bool:
        return self.setting in Settings.UNCONTROLLABLE

    @property
    def effective_alpha(self) -> float:
        """Level used by the algorithm (alpha - xi when the CC level shift is on)."""
        return self.alpha - self.xi if self.cc_alpha_shift else self.alpha

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> 'ExperimentConfig':
        """
        Validate a mapping, inheriting omitted blocks from the preset of its problem.

        Args:
            data: Config fields (unknown keys are rejected)

        Returns:
            Validated ExperimentConfig

        Raises:
            ConfigurationError: On unknown keys or out-of-range values
        """
        if not isinstance(data, Mapping):
            raise ConfigurationError("config document must be a mapping")
        from drccbo.config.presets import preset_fields

        problem = data.get("problem", Problems.SYNTHETIC)
        setting = data.get("setting", Settings.SIMULATOR)
        fields: Dict[str, Any] = {}
        if problem in Problems.ALL and setting in Settings.ALL:
            fields = preset_fields(problem, setting)
        fields.update(data)
        try:
            return cls.model_validate(fields)
        except ValidationError as e:
            raise ConfigurationError(_describe(e)) from e

    @classmethod
    def from_preset(cls, problem: str, setting: str = Settings.SIMULATOR,
                    **overrides) -> 'ExperimentConfig':
        return cls.from_mapping({"problem": problem, "setting": setting, **overrides})

    @classmethod
    def from_file(cls, path: Path) -> 'ExperimentConfig':
        """
        Load a JSON (.json) or YAML (.yaml/.yml) config file.

        Args:
            path: Config file path

        Returns:
            Validated ExperimentConfig
        """
        path = Path(path)
        if not path.is_file():
            raise ConfigurationError(f"config file not found: {path}", "config")
        try:
            text = path.read_text(encoding="utf-8")
            if path.suffix.lower() in (".yaml", ".yml"):
                data = yaml.safe_load(text)
            else:
                data = json.loads(text)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise ConfigurationError(f"cannot parse {path}: {e}", "config") from e
        return cls.from_mapping(data or {})

    def with_overrides(self, **fields) -> 'ExperimentConfig':
        """Copy with CLI overrides applied (None values are ignored) and re-validated."""
        updates = {key: value for key, value in fields.items() if value is not None}
        if not updates:
            return self
        try:
            return ExperimentConfig.model_validate({**self.model_dump(), **updates})
        except ValidationError as e:
            raise ConfigurationError(_describe(e)) from e


def _describe(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "config"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


@dataclass
class RuntimeSettings:
    """Process-level knobs that do not change experiment semantics."""

    log_level: str = LogLevels.INFO
    max_workers: int = 4
    sir_cache_path: Optional[Path] = None

    @classmethod
    def from_env(cls) -> 'RuntimeSettings':
        """
        Create runtime settings from environment variables.

        Returns:
            RuntimeSettings instance with values from environment
        """
        cache = os.getenv(EnvVars.SIR_CACHE)
        try:
            workers = int(os.getenv(EnvVars.MAX_WORKERS, "4"))
        except ValueError as e:
            raise ConfigurationError(f"{EnvVars.MAX_WORKERS} must be an integer", EnvVars.MAX_WORKERS) from e
        return cls(
            log_level=os.getenv(EnvVars.LOG_LEVEL, LogLevels.INFO).upper(),
            max_workers=workers,
            sir_cache_path=Path(cache) if cache else None,
        )

    def validate(self) -> list:
        """
        Validate runtime settings.

        Returns:
            List of validation error messages (empty if valid)
        """
        errors = []
        if self.max_workers < 1:
            errors.append("max_workers must be positive")
        if self.log_level not in LogLevels.ALL:
            errors.append(f"Invalid log_level: {self.log_level}")
        return errors
