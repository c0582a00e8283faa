"""
Exact statistics of X = sum_j lambda_j g_j^2, g_j independent standard normals
"""

import logging
import math
import warnings
from typing import Union

import numpy as np

from ..specfun.calibration import calibrated
from ..utils.validators import DomainError, TruncationWarning, require
from .spectrum import Spectrum

# Characteristic-function series stops once its geometric tail is below this
SERIES_TAIL = 1.e-14
MAX_SERIES_TERMS = 200_000


def qf_mean(spec: Spectrum) -> float:
    """E[X] = sum lambda_j"""
    return spec.power_sum(1)


def qf_variance(spec: Spectrum) -> float:
    """Var[X] = 2 sum lambda_j^2"""
    return 2.0 * spec.power_sum(2)


def qf_mgf(spec: Spectrum, s: float) -> float:
    """
    E[exp(sX)] = prod_j (1 - 2 s lambda_j)^(-1/2)

    Raises:
        DomainError: If 1 - 2 s lambda_max <= 0 (s beyond the abscissa)

    Example:
        >>> qf_mgf(Spectrum.from_values([1.0]), 0.0)
        1.0
    """
    require(1.0 - 2.0 * s * spec.lambda_max > 0,
            f"qf_mgf: s = {s} is beyond the abscissa 1/(2 lambda_max) = {0.5 / spec.lambda_max}")
    return math.exp(-0.5 * float(np.sum(np.log1p(-2.0 * s * spec.lambdas))))


def charfn_radius(spec: Spectrum) -> float:
    """Largest |t| for which the standardized series converges: sigma / (2 lambda_max)"""
    return spec.sigma / (2.0 * spec.lambda_max)


def qf_charfn_standardized(spec: Spectrum, t: Union[float, complex]) -> complex:
    """
    E[exp(itZ)] for Z = (X - E[X]) / sigma, from the cumulant series

    log E[exp(itZ)] = sum_{p >= 2} (1 / 2p) sum_j z_j^p, z_j = 2 i t lambda_j / sigma

    Raises:
        DomainError: If 2 |t| lambda_max >= sigma (the series diverges)
    """
    sigma = spec.sigma
    q = 2.0 * abs(t) * spec.lambda_max / sigma
    if q >= 1.0:
        raise DomainError(
            f"charfn series diverges at |t| = {abs(t):.6g}: radius is {charfn_radius(spec):.6g}"
        )
    if t == 0:
        return complex(1.0)

    z = 2j * complex(t) * spec.lambdas / sigma
    power = z * z
    total = 0j
    # sum_j |z_j|^2 = 2 |t|^2
    tail_scale = 2.0 * abs(t) ** 2 / (1.0 - q)
    p = 2
    while True:
        total += complex(np.sum(power)) / (2.0 * p)
        if tail_scale * q ** (p - 1) / (2.0 * (p + 1)) < SERIES_TAIL:
            break
        if p >= MAX_SERIES_TERMS:
            message = f"charfn series truncated at p = {p} with q = {q:.6f}"
            logging.warning(message)
            warnings.warn(message, TruncationWarning)
            break
        power = power * z
        p += 1
    return complex(np.exp(total))


def lyapunov_ratio(spec: Spectrum) -> float:
    """tr(A^3) / tr(A^2)^(3/2), in (0, 1]"""
    top = spec.lambda_max
    scaled = spec.lambdas / top
    return float(np.sum(scaled ** 3) / np.sum(scaled ** 2) ** 1.5)


def gaussian_charfn_gap_bound(spec: Spectrum) -> float:
    """Calibrated bound C * lyapunov_ratio on |E[exp(iZ)] - exp(-1/2)| (C = 'charfn_lyapunov')"""
    return calibrated('charfn_lyapunov') * lyapunov_ratio(spec)


def clt_error_bound(spec: Spectrum, t: float) -> float:
    """
    Bound q^3 / (1 - q) on |log E[exp(itZ)] + t^2/2|

    q = 2 |t| (sum lambda^3)^(1/3) / sigma

    Raises:
        DomainError: If q >= 1
    """
    q = 2.0 * abs(t) * spec.p_norm(3) / spec.sigma
    require(q < 1.0, f"clt_error_bound needs q < 1, got q = {q:.6g}")
    return q ** 3 / (1.0 - q)
