"""
Configuration module for the wavecrest command line
Centralizes environment-driven settings
"""

import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from ..utils.validators import ConfigError

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")


class Config:
    """Centralized configuration for experiment runs"""

    # Output
    DEFAULT_OUT: str = 'results'
    OUT_DIR: str = os.getenv('WAVECREST_OUT', DEFAULT_OUT)

    # Worker threads; 0 means machine parallelism
    THREADS: int = 0

    # Alternative calibration fixture (None for the packaged one)
    CALIBRATION: Optional[str] = os.getenv('WAVECREST_CALIBRATION')

    # Logging
    LOG_LEVEL: str = os.getenv('LOG_LEVEL', 'INFO')
    LOG_FORMAT: str = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    # Exit statuses
    EXIT_OK: int = 0
    EXIT_FAILED: int = 1
    EXIT_CONFIG: int = 2

    @classmethod
    def validate(cls) -> bool:
        """
        Validates the current settings

        Returns:
            bool: True if configuration is valid

        Raises:
            ConfigError: On a negative thread count, an unknown log level or a
                calibration path that does not exist
        """
        if cls.THREADS < 0:
            raise ConfigError(f"WAVECREST_THREADS must be >= 0, got {cls.THREADS}")
        if cls.LOG_LEVEL.upper() not in LOG_LEVELS:
            raise ConfigError(f"LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {cls.LOG_LEVEL!r}")
        if cls.CALIBRATION and not Path(cls.CALIBRATION).is_file():
            raise ConfigError(f"WAVECREST_CALIBRATION points to a missing file: {cls.CALIBRATION}")
        if not cls.OUT_DIR:
            raise ConfigError("WAVECREST_OUT must not be empty")
        return True

    @classmethod
    def from_env(cls, env_file: Optional[str] = None) -> None:
        """
        Loads configuration from the environment, after an optional .env file

        Args:
            env_file: Path to .env file (optional)

        Raises:
            ConfigError: If env_file is given but does not exist
        """
        if env_file:
            if not os.path.exists(env_file):
                raise ConfigError(f"Environment file not found: {env_file}")
            load_dotenv(env_file, override=True)
            logging.debug(f"Loaded environment variables from {env_file}")

        # Refresh from environment
        cls.OUT_DIR = os.getenv('WAVECREST_OUT', cls.DEFAULT_OUT)
        cls.THREADS = _env_int('WAVECREST_THREADS', 0)
        cls.CALIBRATION = os.getenv('WAVECREST_CALIBRATION')
        cls.LOG_LEVEL = os.getenv('LOG_LEVEL', cls.LOG_LEVEL)
