"""Runtime settings read from the environment (and a `.env` file via main.py)."""

import logging
import os
from dataclasses import dataclass

from .errors import ConfigError

DEFAULT_JOBS = 1
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_RESIDUAL_LIMIT = 9


@dataclass(frozen=True)
class Settings:
    """Process-wide defaults; command-line flags take precedence."""

    jobs: int = DEFAULT_JOBS
    log_level: str = DEFAULT_LOG_LEVEL
    residual_limit: int = DEFAULT_RESIDUAL_LIMIT


def _read_int(name: str, default: int, minimum: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings() -> Settings:
    """
    Build Settings from FISHBURN_* environment variables.

    Returns:
        Settings with defaults for unset variables

    Raises:
        ConfigError: If a variable is set to an unusable value
    """
    level = os.environ.get("FISHBURN_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"FISHBURN_LOG_LEVEL is not a logging level: {level!r}")

    return Settings(
        jobs=_read_int("FISHBURN_JOBS", DEFAULT_JOBS, 1),
        log_level=level,
        residual_limit=_read_int("FISHBURN_RESIDUAL_LIMIT", DEFAULT_RESIDUAL_LIMIT, 0),
    )
