"""Test the configuration singleton and logging setup."""

import logging
from logging.handlers import TimedRotatingFileHandler
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from thompson.config import LOG_FORMAT, Config, search_limits, setup_logging


def test_defaults_without_file(tmp_path):
    """Test that a workspace without config.yaml yields the defaults."""
    config = Config()
    assert config.workspace_path == str(tmp_path)
    assert config.data.search.max_steps == 1_000_000
    assert config.data.search.pond_path_length == 12
    assert config.data.logging.level == "warning"
    assert config.data.logging.filename is None


def test_load_yaml_with_env_values(tmp_path, monkeypatch):
    """Test reading config.yaml and resolving env. values."""
    monkeypatch.setenv("THOMPSON_TEST_LOG", "/tmp/thompson.log")
    (tmp_path / "config.yaml").write_text(
        "search:\n  max_steps: 500\nlogging:\n  level: debug\n  filename: env.THOMPSON_TEST_LOG\n",
        encoding="utf-8",
    )
    config = Config()
    assert config.data.search.max_steps == 500
    assert config.data.search.pond_path_length == 12
    assert config.data.logging.level == "debug"
    assert config.data.logging.filename == "/tmp/thompson.log"


def test_unset_env_value_becomes_none(tmp_path, monkeypatch):
    """Test that an env. reference to a missing variable resolves to None."""
    monkeypatch.delenv("THOMPSON_MISSING", raising=False)
    (tmp_path / "config.yaml").write_text("logging:\n  filename: env.THOMPSON_MISSING\n", encoding="utf-8")
    assert Config().data.logging.filename is None


def test_invalid_values_are_rejected(tmp_path):
    """Test that a non-positive step cap fails validation."""
    (tmp_path / "config.yaml").write_text("search:\n  max_steps: 0\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        Config()


def test_explicit_workspace_wins(tmp_path):
    """Test that an explicit workspace overrides THOMPSON_WORKSPACE."""
    other = tmp_path / "other"
    other.mkdir()
    (other / "config.yaml").write_text("search:\n  max_steps: 42\n", encoding="utf-8")
    config = Config(str(other))
    assert config.workspace_path == str(other)
    assert search_limits().max_steps == 42


def test_singleton_and_reset(tmp_path):
    """Test that Config is shared until reset."""
    first = Config()
    assert Config() is first
    Config.reset_instance()
    assert Config() is not first


def test_override_search(tmp_path):
    """Test replacing search limits in process."""
    config = Config()
    config.override_search(max_steps=3)
    assert search_limits().max_steps == 3
    assert search_limits().pond_path_length == 12


def test_reload(tmp_path):
    """Test picking up changes on disk."""
    config = Config()
    (tmp_path / "config.yaml").write_text("search:\n  pond_path_length: 5\n", encoding="utf-8")
    assert config.data.search.pond_path_length == 12
    config.reload()
    assert config.data.search.pond_path_length == 5


@patch("logging.basicConfig")
def test_setup_logging_levels(mock_basic_config, monkeypatch):
    """Test level selection with and without LOG_LEVEL."""
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    monkeypatch.delenv("LOG_FILENAME", raising=False)
    setup_logging()
    kwargs = mock_basic_config.call_args.kwargs
    assert kwargs["level"] == logging.WARNING
    assert kwargs["format"] == LOG_FORMAT
    assert kwargs["force"] is True
    assert len(kwargs["handlers"]) == 1

    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    setup_logging()
    assert mock_basic_config.call_args.kwargs["level"] == logging.DEBUG

    setup_logging("error")
    assert mock_basic_config.call_args.kwargs["level"] == logging.ERROR


@patch("logging.basicConfig")
def test_setup_logging_with_file(mock_basic_config, tmp_path):
    """Test that a filename adds a rotating file handler."""
    setup_logging("info", str(tmp_path / "thompson.log"))
    handlers = mock_basic_config.call_args.kwargs["handlers"]
    assert len(handlers) == 2
    assert isinstance(handlers[1], TimedRotatingFileHandler)
    handlers[1].close()
