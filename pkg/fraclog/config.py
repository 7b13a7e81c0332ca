"""Run configuration: defaults, fraclog.yaml and environment overrides."""

import logging
import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from fraclog.inequalities.report import TolerancePolicy

logger = logging.getLogger(__name__)

CONFIG_FILENAME = "fraclog.yaml"
THREADS_ENV = "FRACLOG_THREADS"


class ConfigError(Exception):
    """Configuration loading or validation error."""

    pass


class GridConfig(BaseModel):
    """Periodic grid resolution."""

    points_per_axis: int = Field(default=256, ge=16, description="Grid points per axis N")
    half_width: float = Field(default=8.0, gt=0, description="Half width L of [-L, L)^d")

    @field_validator("points_per_axis")
    @classmethod
    def validate_power_of_two(cls, v: int) -> int:
        """Validate that N is a power of two."""
        if v & (v - 1):
            raise ValueError(f"points_per_axis must be a power of two (got {v})")
        return v


class RadialConfig(BaseModel):
    """Radial quadrature resolution."""

    node_count: int = Field(default=512, ge=32, description="Double-exponential nodes")


class ToleranceConfig(BaseModel):
    """Margin tolerance policy."""

    scale: float = Field(default=1.0, gt=0, description="Multiplier on every tolerance")
    spectral: float = Field(default=1e-6, gt=0, description="Relative tolerance, spectral grids")
    power_law: float = Field(default=1e-4, gt=0, description="Relative tolerance, power-law tails")

    @model_validator(mode="after")
    def validate_ordering(self) -> "ToleranceConfig":
        """Power-law tails never get a tighter tolerance than smooth fields."""
        if self.power_law < self.spectral:
            raise ValueError("power_law tolerance must be >= spectral tolerance")
        return self

    def policy(self) -> TolerancePolicy:
        """The margin tolerance policy these settings describe."""
        return TolerancePolicy(spectral=self.spectral, power_law=self.power_law, scale=self.scale)


class OutputConfig(BaseModel):
    """CSV output and worker settings."""

    csv: Path | None = Field(default=None, description="CSV path; stdout when unset")
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    batch_size: int = Field(default=64, ge=1, le=10000, description="Rows per batched write")
    batch_timeout: float = Field(default=0.5, ge=0.01, le=60.0, description="Seconds before a partial batch is flushed")


class RunConfig(BaseModel):
    """Root configuration schema."""

    seed: int = Field(default=0, ge=0, lt=2**64)
    grid: GridConfig = Field(default_factory=GridConfig)
    radial: RadialConfig = Field(default_factory=RadialConfig)
    tolerance: ToleranceConfig = Field(default_factory=ToleranceConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)


def find_config_file(filename: str = CONFIG_FILENAME, config_path: Path | None = None) -> Path | None:
    """Find a configuration file.

    Search order:
    1. Explicit path if provided
    2. ./{filename} (current directory)
    3. ~/{filename} (home directory)

    Returns:
        Path to the config file, or None when no implicit file exists

    Raises:
        ConfigError: If an explicit path does not exist
    """
    if config_path:
        if config_path.exists():
            return config_path
        raise ConfigError(f"Config file not found: {config_path}")

    cwd_config = Path(filename)
    if cwd_config.exists():
        return cwd_config

    home_config = Path.home() / filename
    if home_config.exists():
        return home_config

    return None


def load_yaml_file(path: Path) -> dict[str, Any]:
    """Load and parse a YAML file.

    Raises:
        ConfigError: If file cannot be read or parsed
    """
    try:
        with open(path, encoding="utf-8") as f:
            raw_config = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {path}: {e}") from e
    except OSError as e:
        raise ConfigError(f"Cannot read {path}: {e}") from e

    if raw_config is None:
        return {}
    if not isinstance(raw_config, dict):
        raise ConfigError(f"Config file {path} must contain a YAML mapping")
    return raw_config


def _merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _thread_cap(environ: dict[str, str] | os._Environ[str]) -> int | None:
    raw = environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        cap = int(raw)
    except ValueError as e:
        raise ConfigError(f"{THREADS_ENV} must be an integer (got {raw!r})") from e
    if cap < 1:
        raise ConfigError(f"{THREADS_ENV} must be at least 1 (got {cap})")
    return cap


def load_config(
    config_path: Path | None = None,
    overrides: dict[str, Any] | None = None,
    environ: dict[str, str] | None = None,
) -> RunConfig:
    """Build the run configuration.

    Precedence: overrides (CLI flags) > YAML file > defaults; FRACLOG_THREADS then caps
    the resulting worker count.

    Args:
        config_path: Optional explicit path to fraclog.yaml
        overrides: Nested mapping of CLI values; None entries are ignored
        environ: Environment mapping, os.environ by default

    Returns:
        Validated RunConfig instance

    Raises:
        ConfigError: If the file is missing (explicit path), unreadable or invalid
    """
    path = find_config_file(CONFIG_FILENAME, config_path)
    raw: dict[str, Any] = {}
    if path is not None:
        raw = load_yaml_file(path)
        logger.info(f"Loaded configuration from {path}")

    raw = _merge(raw, _drop_unset(overrides or {}))

    try:
        config = RunConfig.model_validate(raw)
    except ValidationError as e:
        source = path if path is not None else "command line"
        raise ConfigError(f"Invalid configuration ({source}): {e}") from e

    cap = _thread_cap(os.environ if environ is None else environ)
    if cap is not None and cap < config.output.threads:
        logger.debug(f"{THREADS_ENV} caps threads at {cap} (configured {config.output.threads})")
        config.output.threads = cap
    return config


def _drop_unset(values: dict[str, Any]) -> dict[str, Any]:
    cleaned: dict[str, Any] = {}
    for key, value in values.items():
        if isinstance(value, dict):
            nested = _drop_unset(value)
            if nested:
                cleaned[key] = nested
        elif value is not None:
            cleaned[key] = value
    return cleaned
