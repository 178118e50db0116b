#!/usr/bin/env python3
"""
Finite-Duality Configuration
Sweep bounds and logging level, read from defaults, an optional YAML file and
FINITE_DUALITY_* environment variables, in that order.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

ENV_PREFIX = "FINITE_DUALITY_"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class DualityConfig(BaseModel):
    """Bounds for the exhaustive sweeps and the word-level oracles."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    max_size: int = Field(default=3, ge=0, le=6)
    word_bound: int = Field(default=8, ge=0, le=16)
    omega_formula_limit: int = Field(default=12, ge=0)
    sample_size: int = Field(default=200, ge=0)
    seed: int = 0
    log_level: str = "INFO"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return level


def _from_environment() -> Dict[str, str]:
    values = {}
    for name in DualityConfig.model_fields:
        raw = os.environ.get(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = raw
    return values


def _read_yaml(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle)
    except OSError as e:
        raise ConfigurationError(
            f"Cannot read config file {path}: {e}",
            error_code="CONFIG_UNREADABLE",
            details={"path": str(path)},
        ) from e
    except (yaml.YAMLError, UnicodeDecodeError) as e:
        raise ConfigurationError(
            f"Config file {path} is not valid YAML",
            error_code="CONFIG_BAD_YAML",
            details={"path": str(path), "error": str(e)},
        ) from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(
            "Config file must hold a mapping",
            error_code="CONFIG_BAD_YAML",
            details={"path": str(path)},
        )
    return data


def _validated(values: Dict[str, Any]) -> DualityConfig:
    try:
        return DualityConfig(**values)
    except ValidationError as e:
        raise ConfigurationError(
            "Invalid configuration",
            error_code="CONFIG_INVALID",
            details={
                "errors": [
                    {"field": ".".join(str(p) for p in err["loc"]), "message": err["msg"]}
                    for err in e.errors()
                ]
            },
        ) from e


def load_config(path: Optional[Union[str, Path]] = None, use_env: bool = True) -> DualityConfig:
    """
    Defaults, then the YAML file at path, then the environment.

    A .env file in the working directory is loaded first when use_env is set;
    variables already present in the environment win over it.
    """
    values: Dict[str, Any] = {}
    if path is not None:
        values.update(_read_yaml(path))
    if use_env:
        load_dotenv(find_dotenv(usecwd=True), override=False)
        values.update(_from_environment())
    config = _validated(values)
    logger.debug(f"Loaded configuration: {config.model_dump()}")
    return config


def with_overrides(config: DualityConfig, **updates: Any) -> DualityConfig:
    """Copy of config with the given fields replaced; None values are ignored."""
    values = config.model_dump()
    values.update({name: value for name, value in updates.items() if value is not None})
    return _validated(values)
