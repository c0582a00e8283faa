"""
Chernoff tail bounds for Gaussian quadratic forms
"""

import math
from dataclasses import dataclass, asdict
from typing import Any, Dict

import numpy as np

from ..utils.validators import require
from .spectrum import Spectrum


@dataclass(frozen=True)
class ChernoffReport:
    """
    One Chernoff bound on P(X - E[X] > epsilon) (or < -epsilon for the lower tail)

    gaussian_proxy is exp(-epsilon^2 / (4 sum lambda^2)); remainder_bound
    bounds the Taylor remainder R in bound = exp(-s epsilon + s^2 sum lambda^2 + R).
    """
    epsilon: float
    s_used: float
    valid_primary_s: bool
    bound: float
    gaussian_proxy: float
    remainder_bound: float
    side: str = 'upper'

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _exponent(spec: Spectrum, s: float, epsilon: float) -> float:
    # -s eps + sum_j (-s lambda_j - log(1 - 2 s lambda_j) / 2), signed s
    lam = spec.lambdas
    return -abs(s) * epsilon - 0.5 * float(np.sum(np.log1p(-2.0 * s * lam) + 2.0 * s * lam))


def chernoff_tail(spec: Spectrum, epsilon: float) -> ChernoffReport:
    """
    Upper-tail bound exp(-s eps - s E[X]) E[exp(sX)]

    The primary s = eps / (2 sum lambda^2) is used when 1 - 2 s lambda_max > 1/2;
    otherwise s = min(1/4 (sum lambda^2)^(-1/2), 1/(4 lambda_max)).

    Example:
        >>> report = chernoff_tail(Spectrum.from_values([1.0]), 10.0)
        >>> report.valid_primary_s, round(report.bound, 4)
        (False, 0.0904)
    """
    require(epsilon > 0, "chernoff_tail needs epsilon > 0")
    s2 = spec.power_sum(2)
    lam_max = spec.lambda_max

    s = epsilon / (2.0 * s2)
    primary = 1.0 - 2.0 * s * lam_max > 0.5
    if not primary:
        s = min(0.25 / math.sqrt(s2), 0.25 / lam_max)

    bound = min(1.0, math.exp(_exponent(spec, s, epsilon)))
    remainder = 8.0 / 3.0 * s ** 3 * spec.power_sum(3)
    return ChernoffReport(
        epsilon=epsilon,
        s_used=s,
        valid_primary_s=primary,
        bound=bound,
        gaussian_proxy=math.exp(-epsilon ** 2 / (4.0 * s2)),
        remainder_bound=remainder,
    )


def chernoff_lower_tail(spec: Spectrum, epsilon: float) -> ChernoffReport:
    """
    Lower-tail bound on P(X - E[X] < -eps) from E[exp(-sX)], s = eps / (2 sum lambda^2)

    The MGF at -s exists for every s > 0, and the bound never exceeds
    exp(-eps^2 / (4 sum lambda^2)).
    """
    require(epsilon > 0, "chernoff_lower_tail needs epsilon > 0")
    s2 = spec.power_sum(2)
    s = epsilon / (2.0 * s2)
    bound = min(1.0, math.exp(_exponent(spec, -s, epsilon)))
    proxy = math.exp(-epsilon ** 2 / (4.0 * s2))
    return ChernoffReport(
        epsilon=epsilon,
        s_used=s,
        valid_primary_s=True,
        bound=bound,
        gaussian_proxy=proxy,
        remainder_bound=0.0,
        side='lower',
    )


def two_sided_chernoff(spec: Spectrum, epsilon: float) -> float:
    """Bound on P(|X - E[X]| > eps): upper plus lower, capped at 1"""
    return min(1.0, chernoff_tail(spec, epsilon).bound + chernoff_lower_tail(spec, epsilon).bound)
