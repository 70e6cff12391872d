import os
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv

# Default location of the environment file, relative to the repository root
ENV_FILE = Path(__file__).resolve().parent.parent / "config" / ".env"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Settings:
    """
    Runtime limits and knobs, read from the environment.

    Attributes:
        guard_p (int): Largest poset for subset enumeration (ZZ_GUARD_P).
        max_vertices (int): Largest graph the oracle enumerates (ZZ_MAX_VERTICES).
        max_maps (int): Largest n^|Q| for brute-force strict maps (ZZ_MAX_MAPS).
        workers (int): Catalog worker pool size (ZZ_WORKERS).
        log_level (str): Root logger level (ZZ_LOG_LEVEL).
    """
    guard_p: int = 20
    max_vertices: int = 60
    max_maps: int = 200_000
    workers: int = 1
    log_level: str = "INFO"


def _int_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"Environment variable {name} must be positive, got {value}")
    return value


def load_settings(env_file=ENV_FILE):
    """
    Loads the environment file (if present) and builds a Settings object.
    Variables already set in the process environment take precedence.
    """
    load_dotenv(env_file)
    return Settings(
        guard_p=_int_env("ZZ_GUARD_P", Settings.guard_p),
        max_vertices=_int_env("ZZ_MAX_VERTICES", Settings.max_vertices),
        max_maps=_int_env("ZZ_MAX_MAPS", Settings.max_maps),
        workers=_int_env("ZZ_WORKERS", os.cpu_count() or 1),
        log_level=os.getenv("ZZ_LOG_LEVEL", Settings.log_level).upper(),
    )


@lru_cache(maxsize=1)
def get_settings():
    return load_settings()


def setup_logging(level=None):
    """Configures the root logger once; later calls only adjust the level."""
    level = level or get_settings().log_level
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)


def resolve_limit(value, name):
    """value if given, else the Settings field of that name; explicit limits must be positive."""
    if value is None:
        return getattr(get_settings(), name)
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value
