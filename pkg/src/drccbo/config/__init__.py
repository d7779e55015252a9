"""Configuration management."""

from drccbo.config.presets import PRESETS, preset_fields
from drccbo.config.settings import (
    BaselineSettings, BetaSettings, EpsilonSettings, ExperimentConfig, GridSettings,
    KernelSettings, RuntimeSettings,
)

__all__ = ['ExperimentConfig', 'KernelSettings', 'BetaSettings', 'EpsilonSettings', 'GridSettings',
           'BaselineSettings', 'RuntimeSettings', 'PRESETS', 'preset_fields']
