"""Configuration loader for thompson.

Loads configuration from <workspace>/config.yaml with support for
environment variable resolution (values prefixed with 'env.').
"""

import logging
import os
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, Field

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s - Line: %(lineno)d - %(funcName)s - %(message)s"

_LOG_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}


def setup_logging(level: str | None = None, filename: str | None = None) -> None:
    """Configure the root logger for command-line use.

    Library modules only create loggers; nothing is configured on import.

    Args:
        level: One of debug, info, warning, error. Falls back to env LOG_LEVEL, then "warning".
        filename: Optional log file. Falls back to env LOG_FILENAME; no file handler when unset.
    """
    level_name = (level or os.getenv("LOG_LEVEL", "warning")).lower()
    log_level = _LOG_LEVELS.get(level_name, logging.INFO)

    log_handlers: list[logging.Handler] = [logging.StreamHandler()]

    log_filename = filename or os.getenv("LOG_FILENAME")
    if log_filename:
        file_handler = TimedRotatingFileHandler(
            log_filename,
            when="midnight",
            interval=1,
            backupCount=12,
        )
        file_handler.suffix = "%Y-%m"
        log_handlers.append(file_handler)

    logging.basicConfig(level=log_level, format=LOG_FORMAT, handlers=log_handlers, force=True)


class SearchConfig(BaseModel):
    """Caps on the bounded searches."""

    max_steps: int = Field(default=1_000_000, gt=0, description="Step cap for orbit scans and conjugator searches")
    pond_path_length: int = Field(
        default=12, gt=0, description="Longest descending path tried when looking for a complete infinite component"
    )


class LoggingConfig(BaseModel):
    """Logging configuration section."""

    level: Literal["debug", "info", "warning", "error"] = Field(default="warning", description="Root log level")
    filename: str | None = Field(default=None, description="Rotating log file (supports env. prefix)")


class ConfigData(BaseModel):
    """Complete configuration data structure."""

    search: SearchConfig = Field(default_factory=SearchConfig, description="Search limits")
    logging: LoggingConfig = Field(default_factory=LoggingConfig, description="Logging configuration")


class Config:
    """Global configuration singleton for thompson.

    Loads configuration from <workspace>/config.yaml with environment variable
    resolution. Values prefixed with 'env.' are resolved from the environment.
    A missing file yields the defaults.

    Example:
        filename: env.THOMPSON_LOG  # Loads from os.getenv("THOMPSON_LOG")

    Usage:
        from thompson.config import Config

        config = Config()
        print(config.data.search.max_steps)
    """

    _instance: "Config | None" = None

    def __new__(cls, workspace_path: str | None = None) -> "Config":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self, workspace_path: str | None = None) -> None:
        """Initialize the configuration (only runs once).

        Args:
            workspace_path: Directory holding config.yaml. Ignored after first init.
        """
        if self._initialized:
            return

        self._workspace_path = self._resolve_workspace_path(workspace_path)
        self._config_file = Path(self._workspace_path) / "config.yaml"
        self._raw_config: dict[str, Any] = {}
        self._data: ConfigData | None = None

        self._load()
        self._initialized = True

    def _resolve_workspace_path(self, workspace_path: str | None) -> str:
        """Resolve the workspace path from parameter or environment.

        Args:
            workspace_path: Explicit path provided, or None to auto-resolve.

        Returns:
            str: Resolved workspace path.
        """
        if workspace_path is not None:
            return workspace_path

        env_path = os.getenv("THOMPSON_WORKSPACE")
        if env_path is not None:
            return env_path

        return "."

    def _load(self) -> None:
        """Load and parse the configuration file."""
        if self._config_file.exists():
            with open(self._config_file, encoding="utf-8") as f:
                self._raw_config = yaml.safe_load(f) or {}
        else:
            self._raw_config = {}

        resolved_config = self._resolve_env_values(self._raw_config)
        self._data = ConfigData.model_validate(resolved_config)

    def _resolve_env_values(self, data: Any) -> Any:
        """Recursively resolve 'env.' references.

        Args:
            data: The data structure to process (dict, list, or scalar).

        Returns:
            The data structure with env. values resolved.
        """
        if isinstance(data, dict):
            return {key: self._resolve_env_values(value) for key, value in data.items()}

        if isinstance(data, list):
            return [self._resolve_env_values(item) for item in data]

        if isinstance(data, str) and data.startswith("env."):
            return os.getenv(data[4:])

        return data

    @property
    def data(self) -> ConfigData:
        """Get the parsed configuration data.

        Raises:
            RuntimeError: If configuration hasn't been loaded.
        """
        if self._data is None:
            raise RuntimeError("Configuration not loaded")
        return self._data

    @property
    def workspace_path(self) -> str:
        return self._workspace_path

    def override_search(self, **values: int) -> None:
        """Replace search limits for this process, e.g. from a CLI flag."""
        self._data = self.data.model_copy(update={"search": self.data.search.model_copy(update=values)})

    def reload(self) -> None:
        """Reload the configuration from disk."""
        self._load()

    @classmethod
    def reset_instance(cls) -> None:
        """Reset the singleton instance (mainly for testing)."""
        cls._instance = None


def search_limits() -> SearchConfig:
    """Return the active search limits."""
    return Config().data.search
