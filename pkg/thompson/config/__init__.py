"""Configuration module for thompson."""

from .config import (
    LOG_FORMAT,
    Config,
    ConfigData,
    LoggingConfig,
    SearchConfig,
    search_limits,
    setup_logging,
)

__all__ = [
    "LOG_FORMAT",
    "Config",
    "ConfigData",
    "LoggingConfig",
    "SearchConfig",
    "search_limits",
    "setup_logging",
]
