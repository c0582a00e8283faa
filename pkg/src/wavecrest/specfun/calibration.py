"""
Calibration table
Process-wide, read-once access to the calibrated bound constants
"""

import logging
import os
from pathlib import Path
from typing import Dict, List, Optional

from ..patterns.singleton import SingletonMeta
from ..utils.validators import ConfigError

DEFAULT_PATH = Path(__file__).resolve().parent.parent / 'data' / 'calibration.txt'


def parse_calibration(text: str) -> Dict[str, float]:
    """
    Parse "name value" lines; blank lines and # comments are skipped

    Example:
        >>> parse_calibration("# bound\\nbessel_transition 0.6749\\n")
        {'bessel_transition': 0.6749}
    """
    constants: Dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ConfigError(f"Calibration line {lineno}: expected 'name value', got {raw!r}")
        name, value = parts
        try:
            constants[name] = float(value)
        except ValueError:
            raise ConfigError(f"Calibration line {lineno}: {value!r} is not a number")
    return constants


class CalibrationTable(metaclass=SingletonMeta):
    """
    Calibrated constants, loaded once per process

    The file is WAVECREST_CALIBRATION when set, else the packaged fixture.
    Call CalibrationTable.reset() to reload after changing the environment.

    Example:
        >>> CalibrationTable().get('bessel_transition')
        0.6749
    """

    def __init__(self, path: Optional[str] = None):
        self.path = Path(path or os.getenv('WAVECREST_CALIBRATION') or DEFAULT_PATH)
        if not self.path.is_file():
            raise ConfigError(f"Calibration file not found: {self.path}")
        self._constants = parse_calibration(self.path.read_text(encoding='utf-8'))
        logging.debug(f"Loaded {len(self._constants)} calibration constants from {self.path}")

    def get(self, name: str) -> float:
        try:
            return self._constants[name]
        except KeyError:
            raise ConfigError(f"Calibration constant '{name}' missing from {self.path}")

    def __getitem__(self, name: str) -> float:
        return self.get(name)

    def names(self) -> List[str]:
        return sorted(self._constants)


def calibrated(name: str) -> float:
    """Shortcut for CalibrationTable().get(name)"""
    return CalibrationTable().get(name)
