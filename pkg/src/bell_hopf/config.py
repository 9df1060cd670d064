"""
Configuration management for bell-hopf.

This module handles loading, validation, and persistence of the tunables shared
by the library, the CLI and the MCP server: truncation order, Fock-space
dimension, decimal precision, enumeration bounds and Hopf-check sampling.
"""

import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel
from pydantic import Field
from pydantic import field_validator

from .logging_config import get_logger

logger = get_logger("config")

ENV_ORDER = "BELL_HOPF_ORDER"
ENV_FOCK_DIM = "BELL_HOPF_FOCK_DIM"
ENV_PRECISION = "BELL_HOPF_PRECISION"
ENV_LOG_LEVEL = "BELL_HOPF_LOG_LEVEL"

_ENV_FIELDS = {
    ENV_ORDER: "truncation_order",
    ENV_FOCK_DIM: "fock_dimension",
    ENV_PRECISION: "decimal_precision",
    ENV_LOG_LEVEL: "log_level",
}


class BellHopfConfig(BaseModel):
    """
    Configuration model for bell-hopf.
    """

    # Series and numerics
    truncation_order: int = Field(
        default=16, ge=0, le=64, description="Default truncation order N of exponential series"
    )

    fock_dimension: int = Field(
        default=32, ge=4, le=512, description="Truncated Fock-space dimension for the numeric oracle"
    )

    decimal_precision: int = Field(
        default=30, ge=15, le=200, description="Decimal digits for partition-function arithmetic"
    )

    fock_tolerance: float = Field(
        default=1e-9, gt=0, le=1e-3, description="Error estimate accepted from the Fock oracle"
    )

    quadrature_upper: float = Field(
        default=60.0, gt=0, description="Upper limit of the finite part of the y-integral"
    )

    quadrature_steps: int = Field(
        default=8000, ge=2, le=1_000_000, description="Composite Simpson panels (rounded up to even)"
    )

    # Enumeration bounds
    max_bell_n: int = Field(default=1000, ge=0, description="Largest n accepted by the bell table")

    max_enumeration_n: int = Field(
        default=12, ge=0, le=15, description="Largest n for brute-force set-partition enumeration"
    )

    max_listing_n: int = Field(
        default=8, ge=0, le=12, description="Largest n for full labeled-diagram listings"
    )

    max_census_n: int = Field(
        default=60, ge=0, le=200, description="Largest n for closed-form shape census"
    )

    # Hopf axiom checks
    hopf_weight_bound: int = Field(default=6, ge=0, le=12, description="Default basis weight bound")

    hopf_random_samples: int = Field(
        default=100, ge=0, le=10_000, description="Random linear combinations per axiom check"
    )

    random_seed: int = Field(default=20260101, description="Seed for reproducible sampling")

    max_workers: int = Field(
        default=1, ge=1, le=64, description="Worker processes for axiom checks (1 = in-process)"
    )

    # Logging
    log_level: str = Field(
        default="WARNING", description="Logging level (DEBUG, INFO, WARNING, ERROR)"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate logging level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v.upper()

    @classmethod
    def load_from_file(cls, config_path: str | Path) -> "BellHopfConfig":
        """
        Load configuration from YAML file.

        Args:
            config_path: Path to configuration file

        Returns:
            BellHopfConfig: Loaded configuration

        Raises:
            FileNotFoundError: If config file doesn't exist
            ValueError: If config file is invalid
        """
        path = Path(config_path)

        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {path}")

        try:
            with path.open(encoding="utf-8") as f:
                config_data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in config file {path}: {e}") from e

        if config_data is None:
            config_data = {}
        if not isinstance(config_data, dict):
            raise ValueError(f"Config file {path} must contain a mapping")

        return cls(**config_data)

    @classmethod
    def load_default(cls) -> "BellHopfConfig":
        """
        Load configuration from the first config file found, else defaults.

        Returns:
            BellHopfConfig: Default configuration
        """
        config_paths = [
            Path.cwd() / "bell-hopf.yaml",
            Path.home() / ".config" / "bell-hopf" / "config.yaml",
        ]

        for config_path in config_paths:
            if config_path.exists():
                logger.info(f"Loading configuration from: {config_path}")
                try:
                    return cls.load_from_file(config_path)
                except Exception as e:
                    logger.warning(f"Failed to load config from {config_path}: {e}")

        logger.debug("Using default configuration")
        return cls()

    def load_from_environment(self, environ: dict[str, str] | None = None) -> "BellHopfConfig":
        """
        Return a copy with BELL_HOPF_* environment overrides applied.

        Unparseable values are logged and ignored.

        Args:
            environ: Mapping to read instead of os.environ

        Returns:
            BellHopfConfig: Updated configuration
        """
        source = os.environ if environ is None else environ
        updates: dict[str, Any] = {}
        for env_name, field_name in _ENV_FIELDS.items():
            raw = source.get(env_name)
            if raw is None or raw.strip() == "":
                continue
            updates[field_name] = raw.strip()
        return self.with_overrides(**updates)

    def with_overrides(self, **overrides: Any) -> "BellHopfConfig":
        """
        Return a validated copy with the given non-None fields replaced.

        Invalid overrides are logged and skipped; the rest still apply.
        """
        data = self.model_dump()
        for name, value in overrides.items():
            if value is None:
                continue
            candidate = {**data, name: value}
            try:
                data = type(self)(**candidate).model_dump()
            except ValueError as e:
                logger.warning(f"Ignoring invalid setting {name}={value!r}: {e}")
        return type(self)(**data)

    def save_to_file(self, config_path: str | Path) -> None:
        """
        Save configuration to YAML file.

        Args:
            config_path: Path to save configuration
        """
        path = Path(config_path)
        path.parent.mkdir(parents=True, exist_ok=True)

        with path.open("w", encoding="utf-8") as f:
            yaml.safe_dump(self.model_dump(), f, default_flow_style=False, sort_keys=True, indent=2)
        logger.info(f"Configuration saved to: {path}")


def load_config(config_path: str | Path | None = None) -> BellHopfConfig:
    """
    Load configuration from file (or the default search path) plus environment.

    Args:
        config_path: Optional explicit configuration file

    Returns:
        BellHopfConfig: Loaded configuration

    Raises:
        FileNotFoundError: If an explicit config file does not exist
        ValueError: If the config file is invalid
    """
    if config_path is None:
        base = BellHopfConfig.load_default()
    else:
        base = BellHopfConfig.load_from_file(config_path)
    return base.load_from_environment()
