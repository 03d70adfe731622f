"""Settings and logging from environment."""

import logging
from pathlib import Path

import pytest
from pydantic import ValidationError
from pytest import MonkeyPatch

from garside.config import Settings, configure_logging, find_config, load_config


def test_log_level_from_env(monkeypatch: MonkeyPatch) -> None:
    monkeypatch.setenv("GARSIDE_LOG_LEVEL", "WARNING")
    settings = Settings()
    assert settings.log_level == "WARNING"


def test_nested_search_settings_from_env(monkeypatch: MonkeyPatch) -> None:
    monkeypatch.setenv("GARSIDE_SEARCH__BUDGET", "500")
    monkeypatch.setenv("GARSIDE_SEARCH__FAST_PATH", "true")
    settings = Settings()
    assert settings.search.budget == 500
    assert settings.search.fast_path is True
    assert settings.search.parallel == 1


def test_cache_dir_from_env(monkeypatch: MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("GARSIDE_CACHE_DIR", str(tmp_path))
    assert Settings().cache_dir == tmp_path


def test_configure_logging_invalid_falls_back() -> None:
    configure_logging("NOT_A_LEVEL")
    assert logging.getLogger().level == logging.INFO


def test_configure_logging_reads_env(monkeypatch: MonkeyPatch) -> None:
    monkeypatch.setenv("GARSIDE_LOG_LEVEL", "debug")
    configure_logging()
    assert logging.getLogger().level == logging.DEBUG
    configure_logging("INFO")


def test_invalid_budget_is_rejected() -> None:
    with pytest.raises(ValidationError):
        Settings(search={"budget": 0})


def test_caps() -> None:
    caps = Settings().caps
    assert caps.simple_cap("artin") == 8
    assert caps.simple_cap("bkl") == 10
    assert caps.oracle_cap("artin") == 6
    assert caps.oracle_cap("bkl") == 7


def test_find_config_in_parent(monkeypatch: MonkeyPatch, tmp_path: Path) -> None:
    (tmp_path / "garside.yaml").write_text("profile: fast\n", encoding="utf-8")
    nested = tmp_path / "a" / "b"
    nested.mkdir(parents=True)
    monkeypatch.chdir(nested)
    assert find_config() == tmp_path / "garside.yaml"
    assert load_config().search.fast_path is True


def test_load_config_missing_file_uses_defaults(tmp_path: Path) -> None:
    settings = load_config(tmp_path / "missing.yaml")
    assert settings.profile == "default"
    assert settings.search.budget == 10**6


def test_load_config_expands_cache_dir(tmp_path: Path) -> None:
    config_file = tmp_path / "garside.yaml"
    config_file.write_text("cache_dir: ~/garside-cache\n", encoding="utf-8")
    settings = load_config(config_file)
    assert settings.cache_dir == Path.home() / "garside-cache"
