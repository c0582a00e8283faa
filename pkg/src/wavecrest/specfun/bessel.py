"""
Bessel functions of the first kind
Envelope-checked evaluation, the normalized radial kernel and the
three-regime bounds on |J_m(u)|
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np
from scipy.special import gammaln, jv

from ..utils.validators import require
from .calibration import calibrated

ArrayLike = Union[float, np.ndarray]

NU_MAX = 1.0e4
X_MAX = 1.0e6

# Exponent excess in the turning-point window m +/- m^(1/3 + DELTA)
DELTA = 0.1

# Below this argument the normalized kernel uses its two-term series
_SERIES_CUTOFF = 1.0e-4


def _result(value: np.ndarray, *inputs) -> ArrayLike:
    if all(np.ndim(v) == 0 for v in inputs):
        return float(value)
    return value


def bessel_j(nu: ArrayLike, x: ArrayLike) -> ArrayLike:
    """
    J_nu(x) for real order 0 <= nu <= 1e4 and argument 0 <= x <= 1e6

    Scalars in, float out; any array input broadcasts.

    Raises:
        DomainError: On a negative or non-finite argument or order, or
            either outside the supported envelope

    Example:
        >>> bessel_j(0, 0)
        1.0
    """
    nu_arr = np.asarray(nu, dtype=float)
    x_arr = np.asarray(x, dtype=float)
    require(bool(np.all(np.isfinite(nu_arr)) and np.all(np.isfinite(x_arr))),
            "bessel_j needs finite nu and x")
    require(bool(np.all(x_arr >= 0)), "bessel_j needs x >= 0")
    require(bool(np.all(nu_arr >= 0)), "bessel_j needs nu >= 0")
    require(bool(np.all(nu_arr <= NU_MAX)), f"bessel_j supports nu <= {NU_MAX:g}")
    require(bool(np.all(x_arr <= X_MAX)), f"bessel_j supports x <= {X_MAX:g}")
    return _result(jv(nu_arr, x_arr), nu, x)


def normalized_kernel(n: int, u: ArrayLike) -> ArrayLike:
    """
    2^nu Gamma(nu + 1) J_nu(u) / u^nu with nu = n/2 - 1

    The radial profile of the spectral projector in dimension n; equal to 1
    at u = 0 and bounded by 1 in absolute value.

    Example:
        >>> normalized_kernel(3, 0.0)
        1.0
    """
    require(int(n) == n and n >= 2, "normalized_kernel needs an integer n >= 2")
    nu = n / 2.0 - 1.0
    u_arr = np.asarray(u, dtype=float)
    require(bool(np.all(u_arr >= 0)), "normalized_kernel needs u >= 0")

    out = np.empty_like(u_arr)
    small = u_arr < _SERIES_CUTOFF * math.sqrt(nu + 1.0)
    us = u_arr[small]
    out[small] = 1.0 - us * us / (4.0 * (nu + 1.0))

    ul = u_arr[~small]
    if nu == 0.0:
        out[~small] = bessel_j(0.0, ul)
    else:
        log_scale = nu * math.log(2.0) + gammaln(nu + 1.0) - nu * np.log(ul)
        out[~small] = np.exp(log_scale) * bessel_j(nu, ul)
    return _result(out, u)


class BesselRegime(Enum):
    BELOW_TURNING = 'below_turning'
    TRANSITION = 'transition'
    OSCILLATORY = 'oscillatory'


@dataclass(frozen=True)
class BesselRegimeBound:
    """Upper bound on |J_m(u)| and the regime that produced it"""
    regime: BesselRegime
    value: float


def turning_window(m: float) -> float:
    """Half-width m^(1/3 + DELTA) of the transition window around u = m"""
    return m ** (1.0 / 3.0 + DELTA)


def classify(m: float, u: float) -> BesselRegime:
    """Regime of (m, u); order 0 is always oscillatory"""
    if m == 0:
        return BesselRegime.OSCILLATORY
    w = turning_window(m)
    if u < m - w:
        return BesselRegime.BELOW_TURNING
    if u > m + w:
        return BesselRegime.OSCILLATORY
    return BesselRegime.TRANSITION


def kapteyn_bound(m: float, u: float) -> float:
    """
    Kapteyn's bound exp(m (log x + sqrt(1 - x^2) - log(1 + sqrt(1 - x^2)))), x = u/m

    Valid for 0 <= u <= m; equals 1 at u = m.
    """
    require(m > 0 and 0 <= u <= m, "kapteyn_bound needs 0 <= u <= m, m > 0")
    if u == 0:
        return 0.0
    x = u / m
    s = math.sqrt(max(0.0, 1.0 - x * x))
    return math.exp(m * (math.log(x) + s - math.log1p(s)))


def bessel_bound(m: float, u: float) -> BesselRegimeBound:
    """
    Regime-appropriate upper bound on |J_m(u)|

    below_turning: Kapteyn's exponential bound.
    transition: C m^(-1/3), C = calibration 'bessel_transition'.
    oscillatory: C (u^2 - m^2)^(-1/4), C = calibration 'bessel_oscillatory'.
    Every value is capped at 1, which bounds |J_m| for m >= 0.
    """
    require(m >= 0 and u >= 0, "bessel_bound needs m >= 0 and u >= 0")
    regime = classify(m, u)
    if regime is BesselRegime.BELOW_TURNING:
        value = kapteyn_bound(m, u)
    elif regime is BesselRegime.TRANSITION:
        value = calibrated('bessel_transition') * m ** (-1.0 / 3.0)
    elif u <= m:
        value = 1.0
    else:
        value = calibrated('bessel_oscillatory') * (u * u - m * m) ** -0.25
    return BesselRegimeBound(regime, min(1.0, value))
