"""
Runtime settings read from the environment (and an optional .env file).
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from dotenv import load_dotenv

from services.errors import ConfigError

load_dotenv()


@dataclass(frozen=True)
class Settings:
    report_dir: str = "reports"
    seed: int = 0
    trials: int = 0
    denominator_limit: int = 4
    incircle_resolution: Fraction = Fraction(1, 2)
    oracle_box: int = 6
    svg_width: int = 640
    decimal_places: int = 3
    log_level: str = "INFO"
    workers: int = 0   # 0 means one per CPU


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings() -> Settings:
    """Build settings from TAXICAB_* environment variables."""
    resolution_raw = os.getenv("TAXICAB_INCIRCLE_RESOLUTION", "1/2")
    try:
        resolution = Fraction(resolution_raw.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"TAXICAB_INCIRCLE_RESOLUTION is not a rational: {resolution_raw!r}")
    if resolution <= 0:
        raise ConfigError("TAXICAB_INCIRCLE_RESOLUTION must be positive")

    return Settings(
        report_dir=os.getenv("TAXICAB_REPORT_DIR", "reports"),
        seed=_int_env("TAXICAB_SEED", 0),
        trials=_int_env("TAXICAB_TRIALS", 0),
        denominator_limit=_int_env("TAXICAB_DENOMINATOR_LIMIT", 4, minimum=1),
        incircle_resolution=resolution,
        oracle_box=_int_env("TAXICAB_ORACLE_BOX", 6),
        svg_width=_int_env("TAXICAB_SVG_WIDTH", 640, minimum=64),
        decimal_places=_int_env("TAXICAB_SVG_PRECISION", 3),
        log_level=os.getenv("TAXICAB_LOG_LEVEL", "INFO").upper(),
        workers=_int_env("TAXICAB_WORKERS", 0),
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
