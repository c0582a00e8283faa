"""
Process-wide tables
The calibration constants are parsed once and shared by every worker thread
"""

import threading
from typing import Dict, Any


class SingletonMeta(type):
    """
    Metaclass giving a class one shared instance per process

    CalibrationTable uses it so that quadrature workers and experiment code
    read the same parsed fixture. Construction is guarded by a lock, so two
    threads asking for the table at once still parse the file a single time.
    reset() forgets the instance; tests call it after pointing
    WAVECREST_CALIBRATION at another file.

    Example:
        >>> class Constants(metaclass=SingletonMeta):
        ...     pass
        >>> Constants() is Constants()
        True
    """

    _instances: Dict[type, Any] = {}
    _guard: threading.RLock = threading.RLock()

    def __call__(cls, *args, **kwargs):
        instance = cls._instances.get(cls)
        if instance is None:
            with cls._guard:
                # re-read under the lock: another thread may have built it
                instance = cls._instances.get(cls)
                if instance is None:
                    instance = super().__call__(*args, **kwargs)
                    cls._instances[cls] = instance
        return instance

    def reset(cls) -> None:
        """Drop the shared instance; the next call builds a fresh one"""
        with cls._guard:
            cls._instances.pop(cls, None)
