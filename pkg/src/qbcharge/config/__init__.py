"""qbcharge configuration module."""

from qbcharge.config.logging_setup import configure_logging
from qbcharge.config.presets import PRESETS, get_preset
from qbcharge.config.run_config import RunConfig, metadata, parse_config
from qbcharge.config.settings import Settings, get_settings

__all__ = [
    "Settings",
    "get_settings",
    "RunConfig",
    "parse_config",
    "metadata",
    "PRESETS",
    "get_preset",
    "configure_logging",
]
