"""Configuration module."""

import logging
import os
from pathlib import Path

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from garside.profiles import merge_profile

logger = logging.getLogger(__name__)

_LOG_LEVELS = frozenset({"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"})

CONFIG_FILENAME = "garside.yaml"


class SearchConfig(BaseModel):
    """Class computation settings."""

    budget: int = Field(default=10**6, ge=1, description="Max nodes per conjugacy graph")
    parallel: int = Field(default=1, ge=1, description="Worker threads per BFS level")
    fast_path: bool = Field(default=False, description="Abandon non-minimal conjugators early")
    verify_witnesses: bool = Field(default=False, description="Check every witness on insertion")


class CensusConfig(BaseModel):
    """Census settings."""

    use_cache: bool = Field(default=True, description="Read and write per-(n, l) cache files")
    parallel: int = Field(default=1, ge=1, description="Worker threads for class sharding")


class CapsConfig(BaseModel):
    """Limits on exhaustive enumeration of simple elements."""

    artin_simple_cap: int = Field(default=8, description="Max n for listing B_n+ simples")
    bkl_simple_cap: int = Field(default=10, description="Max n for listing BKL_n+ simples")
    artin_oracle_cap: int = Field(default=6, description="Max n for the full-S oracle on B_n+")
    bkl_oracle_cap: int = Field(default=7, description="Max n for the full-S oracle on BKL_n+")

    def simple_cap(self, monoid: str) -> int:
        return self.artin_simple_cap if monoid == "artin" else self.bkl_simple_cap

    def oracle_cap(self, monoid: str) -> int:
        return self.artin_oracle_cap if monoid == "artin" else self.bkl_oracle_cap


class Settings(BaseSettings):
    """Application settings."""

    profile: str = Field(default="default", description="Profile name")
    log_level: str = Field(default="INFO", description="Root log level (GARSIDE_LOG_LEVEL)")
    cache_dir: Path = Field(
        default_factory=lambda: Path.home() / ".cache" / "garside",
        description="Census cache directory (GARSIDE_CACHE_DIR)",
    )
    search: SearchConfig = Field(default_factory=SearchConfig)
    census: CensusConfig = Field(default_factory=CensusConfig)
    caps: CapsConfig = Field(default_factory=CapsConfig)

    model_config = SettingsConfigDict(
        env_prefix="GARSIDE_",
        env_file=".env",
        env_nested_delimiter="__",
        env_file_encoding="utf-8",
    )


def configure_logging(level: str | None = None) -> None:
    """Apply GARSIDE_LOG_LEVEL to root logger (idempotent)."""
    name = (level or os.environ.get("GARSIDE_LOG_LEVEL", "INFO")).upper()
    if name not in _LOG_LEVELS:
        logger.warning("Invalid GARSIDE_LOG_LEVEL=%s, using INFO", level)
        name = "INFO"
    logging.basicConfig(
        level=getattr(logging, name),
        format="%(asctime)s %(levelname)-8s garside %(message)s",
        force=True,
    )


def find_config() -> Path:
    """garside.yaml in the current directory or the nearest parent that has one."""
    current_dir = Path.cwd()
    candidate = current_dir / CONFIG_FILENAME
    if candidate.exists():
        return candidate
    for parent in current_dir.parents:
        potential = parent / CONFIG_FILENAME
        if potential.exists():
            return potential
    return candidate


def load_config(config_path: str | Path | None = None, profile: str | None = None) -> Settings:
    """
    Load configuration from file and environment variables.

    Args:
        config_path: Path to garside.yaml. If None, searches the current
            directory and its parents.
        profile: Profile preset overriding the one named in the file.

    Returns:
        Configured Settings instance.

    Raises:
        ValidationError: If configuration is invalid.
    """
    path = find_config() if config_path is None else Path(config_path)

    if not path.exists():
        logger.warning("%s not found at %s. Using defaults.", CONFIG_FILENAME, path)
        if profile is None:
            return Settings()
        return Settings(**merge_profile({"profile": profile}, profile))

    try:
        with path.open(encoding="utf-8") as f:
            yaml_data = yaml.safe_load(f) or {}

        if "cache_dir" in yaml_data:
            yaml_data["cache_dir"] = os.path.expanduser(yaml_data["cache_dir"])

        if profile is not None:
            yaml_data["profile"] = profile
        profile_name = yaml_data.get("profile", "default")
        yaml_data = merge_profile(yaml_data, profile_name)
        settings = Settings(**yaml_data)
        logger.info("Config loaded from %s (profile=%s)", path, settings.profile)
        return settings

    except (yaml.YAMLError, OSError, ValueError, TypeError) as e:
        logger.error("Config load error from %s: %s", path, e)
        raise
