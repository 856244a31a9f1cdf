"""Runtime settings module.

Settings are read from environment variables (optionally from a ``.env``
file) into a pydantic model. The model is built lazily on first access and
reused afterwards.
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()

_settings: Optional["Settings"] = None


class Settings(BaseModel):
    """Environment-driven settings shared by the library and the CLI.

    Attributes
    ----------
    log_dir : Path
        Directory receiving the log file.
    log_file : str
        Log file name inside ``log_dir``.
    log_level : str
        Name of the logging level (e.g. "INFO", "DEBUG").
    workers : int
        Number of worker processes used by the benchmark runner.
    seed : int
        Master seed used when no seed is passed explicitly.
    max_failure_rate : float
        Fraction of failed replications above which a benchmark run is
        reported as failed.
    """

    log_dir: Path = Field(default=Path(__file__).parent.parent.parent / "logs")
    log_file: str = "hfnoise.log"
    log_level: str = "INFO"
    workers: int = Field(default=1, ge=1)
    seed: int = Field(default=20240501, ge=0)
    max_failure_rate: float = Field(default=0.1, ge=0.0, le=1.0)

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from ``HFNOISE_*`` environment variables.

        Unset variables fall back to the field defaults.
        """
        values: dict = {}
        env_map = {
            "log_dir": "HFNOISE_LOG_DIR",
            "log_file": "HFNOISE_LOG_FILE",
            "log_level": "HFNOISE_LOG_LEVEL",
            "workers": "HFNOISE_WORKERS",
            "seed": "HFNOISE_SEED",
            "max_failure_rate": "HFNOISE_MAX_FAILURE_RATE",
        }
        for field_name, env_name in env_map.items():
            raw = os.getenv(env_name)
            if raw is not None and raw != "":
                values[field_name] = raw
        return cls(**values)


def get_settings() -> Settings:
    """Get the settings instance (lazy loading).

    Returns
    -------
    Settings
        Settings built from the environment on first call, cached after.
    """
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def reset_settings() -> None:
    """Forget cached settings so the next access re-reads the environment."""
    global _settings
    _settings = None
