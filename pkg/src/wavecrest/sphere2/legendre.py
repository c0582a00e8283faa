"""
Normalized associated Legendre functions and radial cap masses on S^2
"""

import logging
import math
from functools import lru_cache

import numpy as np

from ..utils.quadrature import panel_rule, panels_for_width
from ..utils.validators import QuadratureError, require

PANEL_ORDER = 16
MIN_PANELS = 4
MAX_REFINEMENTS = 3
SUM_RULE_TOLERANCE = 1.e-10


def normalized_legendre(m: int, x) -> np.ndarray:
    """
    P_m^k(x) for k = 0..m, normalized so that int_{-1}^{1} P_m^k(x)^2 dx = 1

    Sectoral values c_k (1 - x^2)^(k/2) seed a degree recurrence run for all
    orders at once.

    Returns:
        Array of shape (m + 1,) + shape(x), row k holding order k
    """
    require(int(m) == m and m >= 0, "normalized_legendre needs an integer m >= 0")
    x = np.asarray(x, dtype=float)
    s = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    shape = (m + 1,) + x.shape

    sectoral = np.empty(shape)
    sectoral[0] = math.sqrt(0.5)
    for k in range(1, m + 1):
        sectoral[k] = sectoral[k - 1] * math.sqrt((2 * k + 1) / (2.0 * k)) * s

    older = np.zeros(shape)
    old = np.zeros(shape)
    for l in range(m + 1):
        new = np.zeros(shape)
        new[l] = sectoral[l]
        if l >= 1:
            new[l - 1] = math.sqrt(2 * l + 1) * x * old[l - 1]
        if l >= 2:
            k = np.arange(l - 1, dtype=float)
            denom = l * l - k * k
            a = np.sqrt((4.0 * l * l - 1.0) / denom)
            b = -np.sqrt((2 * l + 1) * ((l - 1) ** 2 - k * k) / ((2 * l - 3) * denom))
            expand = (slice(None),) + (None,) * x.ndim
            new[:l - 1] = a[expand] * x * old[:l - 1] + b[expand] * older[:l - 1]
        older, old = old, new
    return old


def sum_rule_target(m: int, r: float) -> float:
    """rho_0 + 2 sum_{k>=1} rho_k = (2m + 1)(1 - cos r) / 2"""
    return (2 * m + 1) * (1.0 - math.cos(r)) / 2.0


def _masses(m: int, r: float, n_panels: int) -> np.ndarray:
    theta, weights = panel_rule(0.0, r, n_panels, PANEL_ORDER)
    p = normalized_legendre(m, np.cos(theta))
    return (p * p) @ (weights * np.sin(theta))


@lru_cache(maxsize=64)
def cap_masses(m: int, r: float) -> np.ndarray:
    """
    rho_k = int_0^r P_m^k(cos theta)^2 sin theta d theta for k = 0..m

    The fraction of each orthonormal radial factor's mass inside the cap.
    Panels follow the oscillation scale pi / (m + 1); the panel count doubles
    until the sum rule and successive estimates agree.

    Raises:
        QuadratureError: If refinement does not settle
    """
    require(int(m) == m and m >= 0, "cap_masses needs an integer m >= 0")
    require(0 < r <= math.pi, "cap_masses needs 0 < r <= pi")
    target = sum_rule_target(m, r)
    n_panels = max(MIN_PANELS, panels_for_width(0.0, r, math.pi / (m + 1)))

    previous = _masses(m, r, n_panels)
    for level in range(MAX_REFINEMENTS):
        n_panels *= 2
        current = _masses(m, r, n_panels)
        drift = abs(current[0] + 2.0 * current[1:].sum() - target)
        change = float(np.max(np.abs(current - previous)))
        if drift <= SUM_RULE_TOLERANCE * target and change <= SUM_RULE_TOLERANCE * target:
            current.setflags(write=False)
            return current
        logging.debug(f"cap_masses(m={m}, r={r:.6g}): refining to {n_panels} panels "
                      f"(sum-rule drift {drift:.2e}, change {change:.2e})")
        previous = current
    raise QuadratureError(f"cap_masses(m={m}, r={r:.6g}) did not settle after "
                          f"{MAX_REFINEMENTS} refinements")
