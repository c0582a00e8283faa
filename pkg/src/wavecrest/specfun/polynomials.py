"""
Gegenbauer and Jacobi polynomials
Three-term recurrences, endpoint values and the closed-form cap antiderivative
"""

import math
from typing import Union

import numpy as np
from scipy.special import gammaln

from ..utils.validators import require

ArrayLike = Union[float, np.ndarray]

K_MAX = 10_000

# Rising factorials switch from the exact product to log-gamma above this degree
EXACT_PRODUCT_LIMIT = 150


def _unit_interval(x: ArrayLike, name: str) -> np.ndarray:
    x_arr = np.asarray(x, dtype=float)
    require(bool(np.all(np.abs(x_arr) <= 1.0)), f"{name} needs |x| <= 1")
    return x_arr


def _result(value: np.ndarray, x: ArrayLike) -> ArrayLike:
    return float(value) if np.ndim(x) == 0 else value


def rising_factorial(a: float, k: int) -> float:
    """
    Pochhammer symbol (a)_k = a (a + 1) ... (a + k - 1)

    Example:
        >>> rising_factorial(3.0, 4)
        360.0
    """
    require(k >= 0, "rising_factorial needs k >= 0")
    if k <= EXACT_PRODUCT_LIMIT or a <= 0:
        return float(np.prod(a + np.arange(k, dtype=float)))
    return math.exp(log_rising_factorial(a, k))


def log_rising_factorial(a: float, k: int) -> float:
    """log (a)_k for a > 0"""
    require(a > 0 and k >= 0, "log_rising_factorial needs a > 0 and k >= 0")
    return float(gammaln(a + k) - gammaln(a))


def gegenbauer_at_one(k: int, nu: float) -> float:
    """C_k^nu(1) = (2 nu)_k / k!"""
    require(k >= 0 and nu > 0, "gegenbauer_at_one needs k >= 0 and nu > 0")
    if k <= EXACT_PRODUCT_LIMIT:
        return rising_factorial(2.0 * nu, k) / math.factorial(k)
    return math.exp(log_rising_factorial(2.0 * nu, k) - gammaln(k + 1.0))


def gegenbauer(k: int, nu: float, x: ArrayLike) -> ArrayLike:
    """
    Gegenbauer polynomial C_k^nu(x) by the three-term recurrence

    (j + 1) C_{j+1} = 2 (j + nu) x C_j - (j + 2 nu - 1) C_{j-1}

    Args:
        k: Degree, 0 <= k <= 10^4
        nu: Parameter, nu > 0
        x: Point or array of points in [-1, 1]

    Raises:
        DomainError: On |x| > 1 or a parameter out of range

    Example:
        >>> gegenbauer(1, 1.5, 0.5)
        1.5
    """
    require(int(k) == k and 0 <= k <= K_MAX, f"gegenbauer needs integer 0 <= k <= {K_MAX}")
    require(nu > 0, "gegenbauer needs nu > 0")
    x_arr = _unit_interval(x, 'gegenbauer')

    previous = np.ones_like(x_arr)
    if k == 0:
        return _result(previous, x)
    current = 2.0 * nu * x_arr
    for j in range(1, int(k)):
        previous, current = current, (
            2.0 * (j + nu) * x_arr * current - (j + 2.0 * nu - 1.0) * previous
        ) / (j + 1.0)
    return _result(current, x)


def gegenbauer_sequence(k_max: int, nu: float, x: ArrayLike) -> np.ndarray:
    """
    C_0^nu(x), ..., C_{k_max}^nu(x) from one recurrence sweep

    Returns:
        Array of shape (k_max + 1,) + shape(x)
    """
    require(0 <= k_max <= K_MAX, f"gegenbauer_sequence needs 0 <= k_max <= {K_MAX}")
    require(nu > 0, "gegenbauer_sequence needs nu > 0")
    x_arr = _unit_interval(x, 'gegenbauer_sequence')
    out = np.empty((k_max + 1,) + x_arr.shape)
    out[0] = 1.0
    if k_max >= 1:
        out[1] = 2.0 * nu * x_arr
    for j in range(1, k_max):
        out[j + 1] = (2.0 * (j + nu) * x_arr * out[j] - (j + 2.0 * nu - 1.0) * out[j - 1]) / (j + 1.0)
    return out


def jacobi(k: int, a: float, b: float, x: ArrayLike) -> ArrayLike:
    """
    Jacobi polynomial P_k^(a, b)(x) by the three-term recurrence

    Example:
        >>> jacobi(2, 0.0, 0.0, 1.0)
        1.0
    """
    require(int(k) == k and 0 <= k <= K_MAX, f"jacobi needs integer 0 <= k <= {K_MAX}")
    require(a > -1 and b > -1, "jacobi needs a > -1 and b > -1")
    x_arr = _unit_interval(x, 'jacobi')

    previous = np.ones_like(x_arr)
    if k == 0:
        return _result(previous, x)
    current = (a + 1.0) + (a + b + 2.0) * (x_arr - 1.0) / 2.0
    for j in range(1, int(k)):
        c = 2.0 * j + a + b
        lead = 2.0 * (j + 1.0) * (j + a + b + 1.0) * c
        linear = (c + 1.0) * (c + 2.0) * c
        shift = (c + 1.0) * (a * a - b * b)
        back = 2.0 * (j + a) * (j + b) * (c + 2.0)
        previous, current = current, ((shift + linear * x_arr) * current - back * previous) / lead
    return _result(current, x)


def jacobi_to_gegenbauer(k: int, nu: float) -> float:
    """
    Factor (2 nu)_k / (nu + 1/2)_k with C_k^nu = factor * P_k^(nu-1/2, nu-1/2)
    """
    require(k >= 0 and nu > 0, "jacobi_to_gegenbauer needs k >= 0 and nu > 0")
    return math.exp(log_rising_factorial(2.0 * nu, k) - log_rising_factorial(nu + 0.5, k))


def cap_antiderivative(k: int, nu: float, x: ArrayLike) -> ArrayLike:
    """
    Antiderivative of C_k^nu(x) (1 - x^2)^(nu - 1/2)

    F(x) = -(1 / 2k) (4 nu / (2 nu + k)) (1 - x^2)^(nu + 1/2) C_{k-1}^(nu+1)(x),
    vanishing at both endpoints.
    """
    require(int(k) == k and k >= 1, "cap_antiderivative needs an integer k >= 1")
    require(nu > 0, "cap_antiderivative needs nu > 0")
    x_arr = _unit_interval(x, 'cap_antiderivative')
    weight = np.clip(1.0 - x_arr * x_arr, 0.0, None) ** (nu + 0.5)
    value = -(1.0 / (2.0 * k)) * (4.0 * nu / (2.0 * nu + k)) * weight * gegenbauer(k - 1, nu + 1.0, x_arr)
    return _result(value, x)


def cap_definite_integral(k: int, nu: float, theta_plus: ArrayLike) -> ArrayLike:
    """
    Integral of C_k^nu(cos t) sin^(2 nu) t over t in [0, theta_plus]

    Equals 2 nu / (k (2 nu + k)) sin^(2 nu + 1)(theta_plus) C_{k-1}^(nu+1)(cos theta_plus).
    """
    cos_theta = np.clip(np.cos(np.asarray(theta_plus, dtype=float)), -1.0, 1.0)
    return _result(-np.asarray(cap_antiderivative(k, nu, cos_theta)), theta_plus)
