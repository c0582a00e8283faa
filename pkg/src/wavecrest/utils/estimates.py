"""
Monte Carlo estimates
Mean, standard error and the relative-error budget check
"""

import math
from dataclasses import dataclass, asdict
from typing import Any, Dict

import numpy as np

from .validators import BudgetError


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Sample mean of a Monte Carlo integrand with its standard error"""
    estimate: float
    std_error: float
    samples: int
    seed: int

    def __float__(self) -> float:
        return self.estimate

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def scaled(self, factor: float) -> 'MonteCarloEstimate':
        return MonteCarloEstimate(self.estimate * factor, self.std_error * abs(factor),
                                  self.samples, self.seed)


def summarize(values: np.ndarray, seed: int) -> MonteCarloEstimate:
    """
    Mean and standard error of independent draws

    Example:
        >>> summarize(np.array([1.0, 3.0]), seed=0).estimate
        2.0
    """
    values = np.asarray(values, dtype=float)
    count = values.size
    std = float(np.std(values, ddof=1)) if count > 1 else math.inf
    return MonteCarloEstimate(float(np.mean(values)), std / math.sqrt(count), count, seed)


def check_budget(result: MonteCarloEstimate, max_relative: float, floor: float = 0.0) -> MonteCarloEstimate:
    """
    Reject an estimate whose standard error exceeds max_relative * |estimate|

    Estimates with |estimate| <= floor are accepted as they are.

    Raises:
        BudgetError: If the budget is too small
    """
    if abs(result.estimate) > floor and result.std_error > max_relative * abs(result.estimate):
        raise BudgetError(
            f"Standard error {result.std_error:.3e} exceeds {max_relative:.0%} of the estimate "
            f"{result.estimate:.3e} with {result.samples} samples; raise the budget"
        )
    return result


def uniform_ball(rng: np.random.Generator, shape: tuple, n: int) -> np.ndarray:
    """Uniform points in the unit n-ball: Gaussian direction times U^(1/n)"""
    g = rng.standard_normal(shape + (n,))
    g /= np.linalg.norm(g, axis=-1, keepdims=True)
    radius = rng.random(shape) ** (1.0 / n)
    return g * radius[..., None]


def uniform_sphere(rng: np.random.Generator, shape: tuple, n: int) -> np.ndarray:
    """Uniform points on the unit sphere S^(n-1) in R^n"""
    g = rng.standard_normal(shape + (n,))
    return g / np.linalg.norm(g, axis=-1, keepdims=True)


def loglog_slope(x, y) -> float:
    """
    Least-squares slope of log |y| against log x

    Example:
        >>> round(loglog_slope([1.0, 2.0, 4.0], [1.0, 0.25, 0.0625]), 12)
        -2.0
    """
    x = np.asarray(x, dtype=float)
    y = np.abs(np.asarray(y, dtype=float))
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])
