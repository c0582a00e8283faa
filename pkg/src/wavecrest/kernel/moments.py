"""
Second moment of the local energy in the Euclidean ball model

I2 = (1 / vol(B)^2) int_B int_B normalized_kernel(n, T |x - x'|)^2 dx dx'
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import betainc, jv

from ..specfun.bessel import bessel_j, normalized_kernel
from ..utils.estimates import (
    MonteCarloEstimate, check_budget, loglog_slope, summarize, uniform_ball
)
from ..utils.quadrature import adaptive_panels, integrate_panels
from ..utils.streams import sample_blocks
from ..utils.validators import DomainError, require
from .model import WaveModel

RADIAL_QUADRATURE = 'radial_quadrature'
MONTE_CARLO = 'monte_carlo'
METHODS = (RADIAL_QUADRATURE, MONTE_CARLO)

MIN_MC_BUDGET = 1000
MAX_RELATIVE_ERROR = 0.05


def ball_overlap_fraction(n: int, t) -> np.ndarray:
    """
    vol(B(0,1) & B(t e, 1)) / vol(B) for centers at distance t in [0, 2]

    Regularized incomplete beta I_{1 - t^2/4}((n + 1)/2, 1/2).
    """
    t = np.clip(np.asarray(t, dtype=float), 0.0, 2.0)
    return betainc(0.5 * (n + 1), 0.5, np.clip(1.0 - 0.25 * t * t, 0.0, 1.0))


def distance_density(n: int, t) -> np.ndarray:
    """Density n t^(n-1) overlap(t) of |x - x'| for x, x' uniform in the unit n-ball"""
    t = np.asarray(t, dtype=float)
    return n * t ** (n - 1) * ball_overlap_fraction(n, t)


def normalized_second_moment(n: int, rT: float, rel_err: float = 1.e-8) -> float:
    """
    I2 by the radial reduction: int_0^2 normalized_kernel(n, rT t)^2 density(t) dt

    Usable for any rT > 0; tends to 1 as rT -> 0.
    """
    require(int(n) == n and n >= 2, "normalized_second_moment needs an integer n >= 2")
    require(rT > 0, "normalized_second_moment needs rT > 0")

    def integrand(t: np.ndarray) -> np.ndarray:
        k = np.asarray(normalized_kernel(n, rT * t))
        return k * k * distance_density(n, t)

    width = min(0.25, math.pi / rT)
    return adaptive_panels(integrand, 0.0, 2.0, width, order=16, rel_err=rel_err)


def second_moment_mc(
    n: int,
    rT: float,
    budget: int,
    seed: int = 0,
    threads: Optional[int] = 1
) -> MonteCarloEstimate:
    """
    I2 from budget uniform point pairs in the unit n-ball

    Raises:
        DomainError: If budget < 1000
        BudgetError: If the standard error exceeds 5% of the estimate
    """
    require(budget >= MIN_MC_BUDGET, f"second_moment_mc needs budget >= {MIN_MC_BUDGET}")
    require(int(n) == n and n >= 2 and rT > 0, "second_moment_mc needs n >= 2 and rT > 0")

    def draw(rng: np.random.Generator, rows: int) -> np.ndarray:
        points = uniform_ball(rng, (rows, 2), n)
        d = np.linalg.norm(points[:, 0] - points[:, 1], axis=1)
        return np.asarray(normalized_kernel(n, rT * d)) ** 2

    values = sample_blocks(seed, budget, 2 * (n + 1), draw, threads)
    result = summarize(values, seed)
    logging.debug(f"second_moment_mc n={n} rT={rT}: {result.estimate:.6e} +/- {result.std_error:.2e}")
    return check_budget(result, MAX_RELATIVE_ERROR)


def second_moment(
    model: WaveModel,
    method: str = RADIAL_QUADRATURE,
    budget: int = 10 ** 6,
    seed: int = 0,
    threads: Optional[int] = 1
) -> float:
    """
    Normalized second moment I2 of the model's ball

    Args:
        model: Wave model (n and rT are used)
        method: 'radial_quadrature' or 'monte_carlo'
        budget: Monte Carlo pairs (monte_carlo only)
        seed: Root seed (monte_carlo only)
        threads: Worker threads (monte_carlo only)
    """
    if method == RADIAL_QUADRATURE:
        return normalized_second_moment(model.n, model.rT)
    if method == MONTE_CARLO:
        return second_moment_mc(model.n, model.rT, budget, seed, threads).estimate
    raise DomainError(f"Unknown second_moment method '{method}'. Valid methods: {', '.join(METHODS)}")


@dataclass(frozen=True)
class SweepResult:
    """(rT, value) pairs of a scaling sweep and the fitted log-log slope"""
    points: List[Tuple[float, float]]
    slope: float


def second_moment_sweep(n: int, rT_values: Sequence[float]) -> SweepResult:
    """I2 over a grid of rT with its log-log slope (about -(n - 1))"""
    points = []
    for rT in rT_values:
        value = normalized_second_moment(n, rT)
        logging.info(f"I2(n={n}, rT={rT:g}) = {value:.6e}")
        points.append((float(rT), value))
    slope = loglog_slope([p[0] for p in points], [p[1] for p in points])
    return SweepResult(points, slope)


def bessel_square_average(nu: float, S: float) -> float:
    """
    (1/S) int_0^S u J_nu(u)^2 du by panel quadrature

    Tends to 1/pi as S grows.
    """
    require(nu >= 0, "bessel_square_average needs nu >= 0")
    require(S >= 10, "bessel_square_average needs S >= 10")

    def integrand(u: np.ndarray) -> np.ndarray:
        j = bessel_j(nu, u)
        return u * j * j

    return integrate_panels(integrand, 0.0, S, 0.5 * math.pi, order=16) / S


def bessel_square_average_closed_form(nu: float, S: float) -> float:
    """Lommel's integral: (S / 2) (J_nu(S)^2 - J_{nu-1}(S) J_{nu+1}(S))"""
    return float(0.5 * S * (jv(nu, S) ** 2 - jv(nu - 1.0, S) * jv(nu + 1.0, S)))
