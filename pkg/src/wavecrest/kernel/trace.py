"""
Cyclic kernel integrals on a spherical cap of S^2
"""

import logging
import math
from typing import Optional

import numpy as np

from ..specfun.polynomials import gegenbauer
from ..utils.estimates import MonteCarloEstimate, check_budget, summarize
from ..utils.streams import sample_blocks
from ..utils.validators import require
from .moments import MAX_RELATIVE_ERROR, MIN_MC_BUDGET

MAX_DEGREE = 64


def cap_volume(r: float) -> float:
    """Area 2 pi (1 - cos r) of the cap of angular radius r"""
    return 2.0 * math.pi * (1.0 - math.cos(r))


def cap_points(rng: np.random.Generator, shape: tuple, r: float) -> np.ndarray:
    """Uniform points in the cap around the north pole (cos theta uniform on [cos r, 1])"""
    u = rng.random(shape + (2,))
    z = 1.0 - u[..., 0] * (1.0 - math.cos(r))
    phi = 2.0 * math.pi * u[..., 1]
    rho = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    return np.stack([rho * np.cos(phi), rho * np.sin(phi), z], axis=-1)


def sphere_kernel(m: int, cos_d: np.ndarray) -> np.ndarray:
    """Degree-m projector kernel on S^2: (2m + 1)/(4 pi) P_m(cos d)"""
    return (2 * m + 1) / (4.0 * math.pi) * np.asarray(gegenbauer(m, 0.5, np.clip(cos_d, -1.0, 1.0)))


def kernel_trace_integral(
    p: int,
    m: int,
    r: float,
    budget: int,
    seed: int = 0,
    threads: Optional[int] = 1
) -> MonteCarloEstimate:
    """
    Monte Carlo value of int_{B^p} K(x1, x2) K(x2, x3) ... K(xp, x1) over the cap B

    Equals the trace of the p-th power of the cap-restricted projector,
    (2m + 1)^p vol(B)^p sum_j lambda_j^p in the sphere2 normalization.

    Raises:
        DomainError: On p not in {2, 3}, m above 64, r outside (0, pi], budget < 1000
        BudgetError: If the standard error exceeds 5% of the estimate
    """
    require(p in (2, 3), "kernel_trace_integral needs p in {2, 3}")
    require(0 <= m <= MAX_DEGREE, f"kernel_trace_integral needs 0 <= m <= {MAX_DEGREE}")
    require(0 < r <= math.pi, "kernel_trace_integral needs 0 < r <= pi")
    require(budget >= MIN_MC_BUDGET, f"kernel_trace_integral needs budget >= {MIN_MC_BUDGET}")

    def draw(rng: np.random.Generator, rows: int) -> np.ndarray:
        x = cap_points(rng, (rows, p), r)
        product = np.ones(rows)
        for i in range(p):
            cos_d = np.einsum('ij,ij->i', x[:, i], x[:, (i + 1) % p])
            product *= sphere_kernel(m, cos_d)
        return product

    values = sample_blocks(seed, budget, 2 * p, draw, threads)
    result = summarize(values, seed).scaled(cap_volume(r) ** p)
    logging.debug(f"kernel_trace_integral p={p} m={m} r={r}: "
                  f"{result.estimate:.6e} +/- {result.std_error:.2e}")
    return check_budget(result, MAX_RELATIVE_ERROR)
