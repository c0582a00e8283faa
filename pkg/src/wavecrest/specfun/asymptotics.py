"""
Gegenbauer addition formula and Szego's asymptotic for Jacobi polynomials
"""

import math
from typing import Optional, Tuple

import numpy as np
from scipy.special import gamma, gammaln

from ..utils.validators import require
from .bessel import bessel_j
from .polynomials import gegenbauer, gegenbauer_sequence, jacobi_to_gegenbauer


def addition_terms(u: float, v: float) -> int:
    """Default truncation K = ceil(u + v) + 40"""
    return int(math.ceil(u + v)) + 40


def separation(u: float, v: float, theta: float) -> float:
    """sqrt(u^2 + v^2 - 2uv cos theta), free of cancellation for u close to v"""
    return math.sqrt((u - v) ** 2 + 4.0 * u * v * math.sin(0.5 * theta) ** 2)


def addition_formula_sum(
    nu: float,
    u: float,
    v: float,
    theta: float,
    terms: Optional[int] = None
) -> float:
    """
    Truncated Gegenbauer addition series for J_nu(w) / w^nu

    2^nu Gamma(nu) sum_{k=0..K} (nu + k) J_{nu+k}(u)/u^nu J_{nu+k}(v)/v^nu C_k^nu(cos theta)

    Args:
        nu: Order, nu > 0
        u, v: Positive radii
        theta: Angle between them
        terms: K (defaults to ceil(u + v) + 40)
    """
    require(nu > 0, "addition_formula_sum needs nu > 0")
    require(u > 0 and v > 0, "addition_formula_sum needs u, v > 0")
    k_max = addition_terms(u, v) if terms is None else int(terms)
    orders = nu + np.arange(k_max + 1, dtype=float)
    ju = bessel_j(orders, u) / u ** nu
    jw = bessel_j(orders, v) / v ** nu
    c = gegenbauer_sequence(k_max, nu, math.cos(theta))
    return float(2.0 ** nu * gamma(nu) * np.sum(orders * ju * jw * c))


def addition_formula_residual(
    nu: float,
    u: float,
    v: float,
    theta: float,
    terms: Optional[int] = None
) -> float:
    """|J_nu(w)/w^nu - addition_formula_sum(...)| with w = separation(u, v, theta)"""
    w = separation(u, v, theta)
    require(w > 0, "addition_formula_residual needs a non-zero separation")
    direct = bessel_j(nu, w) / w ** nu
    return abs(direct - addition_formula_sum(nu, u, v, theta, terms))


def szego_sides(k: int, a: float, theta: float) -> Tuple[float, float]:
    """
    Both sides of Szego's asymptotic for the symmetric Jacobi polynomial

    left:  (sin(theta) / 2)^a P_k^(a,a)(cos theta), computed from C_k^(a+1/2)
    right: N^-a Gamma(k + a + 1) / k! (theta / sin theta)^(1/2) J_a(N theta),
           N = k + a + 1/2

    The difference is O(theta^(1/2) k^(-3/2)) for theta in [1/k, pi/2].
    """
    require(k >= 1 and a > -0.5, "szego_sides needs k >= 1 and a > -1/2")
    require(0 < theta < math.pi, "szego_sides needs 0 < theta < pi")
    nu = a + 0.5
    p = gegenbauer(k, nu, math.cos(theta)) / jacobi_to_gegenbauer(k, nu)
    left = (0.5 * math.sin(theta)) ** a * p

    big_n = k + a + 0.5
    log_front = -a * math.log(big_n) + gammaln(k + a + 1.0) - gammaln(k + 1.0)
    right = math.exp(log_front) * math.sqrt(theta / math.sin(theta)) * bessel_j(a, big_n * theta)
    return float(left), float(right)


def szego_envelope(k: int, theta: float) -> float:
    """Error scale theta^(1/2) k^(-3/2) of the asymptotic"""
    return math.sqrt(theta) * k ** -1.5
