"""
Input validation utilities
Error hierarchy shared by every wavecrest module and the experiment
configuration validator used by the CLI
"""

import math
from typing import Dict, Any, List


class ValidationError(Exception):
    """Raised when an input is rejected"""
    pass


class DomainError(ValidationError, ValueError):
    """Raised when an argument lies outside an operation's domain"""
    pass


class ConfigError(ValidationError):
    """Raised when an experiment configuration is invalid"""
    pass


class BudgetError(RuntimeError):
    """Raised when a Monte Carlo budget is too small for the requested precision"""
    pass


class QuadratureError(RuntimeError):
    """Raised when a quadrature fails to converge or fails its self-check"""
    pass


class TruncationWarning(UserWarning):
    """Emitted when a truncated series leaves a tail above tolerance"""
    pass


def require(condition: bool, message: str) -> None:
    """
    Raise DomainError with message unless condition holds

    Args:
        condition: Precondition to check
        message: Error message naming the violated precondition

    Raises:
        DomainError: If condition is false
    """
    if not condition:
        raise DomainError(message)


class ExperimentValidator:
    """Validates experiment names and parameter maps"""

    VALID_EXPERIMENTS = [
        'semicircle', 'clt', 'scaling2', 'scaling3',
        'tail', 'gegencheck', 'kernelcheck', 'wavescale'
    ]

    PARAM_TYPES = {
        'm': int,
        'r': float,
        'kappa': float,
        'n': int,
        'rT': float,
        'samples': int,
        'seed': int,
        'k_max': int,
        'out_path': str,
    }

    # Complete default parameter set per experiment.
    # r = 0 derives the cap radius from kappa; n = 0 sweeps n in {2, 3, 4};
    # k_max = 0 picks the automatic truncation.
    DEFAULTS = {
        'semicircle': {'m': 128, 'kappa': 51.857, 'r': 0.0, 'seed': 0, 'out_path': ''},
        'clt': {'m': 256, 'kappa': 60.0, 'r': 0.0, 'samples': 10000, 'seed': 0, 'out_path': ''},
        'scaling2': {'n': 0, 'rT': 320.0, 'samples': 200000, 'seed': 0, 'out_path': ''},
        'scaling3': {'n': 3, 'rT': 160.0, 'samples': 200000, 'k_max': 0, 'seed': 0, 'out_path': ''},
        'tail': {'m': 256, 'kappa': 60.0, 'r': 0.0, 'samples': 1000000, 'seed': 0, 'out_path': ''},
        'gegencheck': {'samples': 1000, 'seed': 0, 'out_path': ''},
        'kernelcheck': {'n': 2, 'rT': 20.0, 'm': 8, 'r': 0.5, 'samples': 1000000,
                        'seed': 0, 'out_path': ''},
        'wavescale': {'m': 256, 'kappa': 2.0, 'samples': 10000, 'seed': 0, 'out_path': ''},
    }

    @classmethod
    def validate_experiment(cls, experiment: str) -> str:
        """
        Validates an experiment name

        Args:
            experiment: Experiment name

        Returns:
            Normalized (lower-case) experiment name

        Raises:
            ConfigError: If the experiment is unknown
        """
        name = (experiment or '').strip().lower()
        if name not in cls.VALID_EXPERIMENTS:
            raise ConfigError(
                f"Invalid experiment '{experiment}'. "
                f"Valid experiments: {', '.join(cls.VALID_EXPERIMENTS)}"
            )
        return name

    @classmethod
    def validate_params(cls, experiment: str, params: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validates a parameter map and completes it with defaults

        Args:
            experiment: Validated experiment name
            params: Raw parameters (values may be strings from a config file)

        Returns:
            Complete, type-coerced parameter dictionary

        Raises:
            ConfigError: On unknown keys or invalid values
        """
        defaults = cls.DEFAULTS[experiment]
        merged = dict(defaults)

        for key, raw in params.items():
            if key not in defaults:
                raise ConfigError(
                    f"Unknown key '{key}' for experiment '{experiment}'. "
                    f"Valid keys: {', '.join(sorted(defaults))}"
                )
            merged[key] = cls._coerce(key, raw)

        cls._check_ranges(experiment, merged)
        return merged

    @classmethod
    def _coerce(cls, key: str, raw: Any) -> Any:
        target = cls.PARAM_TYPES[key]
        if isinstance(raw, str):
            raw = raw.strip()
        try:
            if target is int:
                value = float(raw) if isinstance(raw, str) else raw
                if isinstance(value, float) and not value.is_integer():
                    raise ValueError(f"{raw!r} is not an integer")
                return int(value)
            if target is float:
                value = float(raw)
                if not math.isfinite(value):
                    raise ValueError(f"{raw!r} is not finite")
                return value
            return str(raw)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid value for '{key}': {e}")

    @classmethod
    def _check_ranges(cls, experiment: str, params: Dict[str, Any]) -> None:
        problems: List[str] = []

        seed = params['seed']
        if not 0 <= seed < 2 ** 64:
            problems.append("seed must be a non-negative 64-bit integer")
        if 'm' in params and params['m'] < 1:
            problems.append("m must be >= 1")
        if 'kappa' in params and params['kappa'] <= 0:
            problems.append("kappa must be > 0")
        if 'r' in params and not 0 <= params['r'] <= math.pi:
            problems.append("r must lie in [0, pi]")
        if 'samples' in params and params['samples'] < 1:
            problems.append("samples must be >= 1")
        if 'rT' in params and params['rT'] <= 0:
            problems.append("rT must be > 0")
        if 'k_max' in params and params['k_max'] < 0:
            problems.append("k_max must be >= 0")
        if 'n' in params:
            n = params['n']
            allowed_zero = experiment == 'scaling2'
            if not (n >= 2 or (allowed_zero and n == 0)):
                problems.append("n must be >= 2")
            if experiment == 'scaling3' and n < 3:
                problems.append("scaling3 needs n >= 3")

        if problems:
            raise ConfigError(f"Invalid parameters for '{experiment}': " + '; '.join(problems))
