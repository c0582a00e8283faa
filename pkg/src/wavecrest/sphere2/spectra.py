"""
Cap-energy spectra on S^2 and their semicircle law

For the degree-m eigenspace and a cap of radius r, the local energy
(1/vol(B)) int_B phi^2 with E[int_{S^2} phi^2] = 1 has eigenvalues
lambda_k = rho_k / ((2m + 1) vol(B)), once for k = 0 and twice for k >= 1.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy.special import beta

from ..kernel.trace import cap_volume
from ..quadform.spectrum import Spectrum
from ..specfun.calibration import calibrated
from ..specfun.bessel import bessel_j
from ..utils.quadrature import integrate_panels
from ..utils.streams import resolve_threads
from ..utils.validators import DomainError, require
from .legendre import cap_masses

EXACT = 'exact'
BESSEL = 'bessel'
METHODS = (EXACT, BESSEL)

# Eigenvalues whose exact value underflows are floored here
FLOOR = float(np.finfo(float).tiny)


@dataclass(frozen=True)
class SphereSpec:
    """
    Degree m and cap radius r on S^2; kappa = r (m + 1/2)

    Example:
        >>> SphereSpec.from_kappa(128, 51.857).kappa
        51.857
    """
    m: int
    r: float

    def __post_init__(self):
        require(int(self.m) == self.m and self.m >= 1, "SphereSpec needs an integer m >= 1")
        require(0 < self.r <= math.pi, "SphereSpec needs 0 < r <= pi")

    @classmethod
    def from_kappa(cls, m: int, kappa: float) -> 'SphereSpec':
        require(kappa > 0, "SphereSpec.from_kappa needs kappa > 0")
        return cls(m, kappa / (m + 0.5))

    @property
    def kappa(self) -> float:
        return round(self.r * (self.m + 0.5), 12)

    @property
    def cap_volume(self) -> float:
        return cap_volume(self.r)


def lambda_exact_all(spec: SphereSpec) -> np.ndarray:
    """lambda_exact for every k = 0..m from one Legendre sweep"""
    values = cap_masses(spec.m, spec.r) / ((2 * spec.m + 1) * spec.cap_volume)
    return np.maximum(values, FLOOR)


def lambda_exact(spec: SphereSpec, k: int) -> float:
    """Exact eigenvalue for azimuthal order k from the radial cap ratio"""
    require(0 <= k <= spec.m, "lambda_exact needs 0 <= k <= m")
    return float(lambda_exact_all(spec)[k])


def lambda_bessel(spec: SphereSpec, k: int) -> float:
    """
    Bessel approximation (1 / (2 pi kappa^2)) int_0^kappa x J_k(x)^2 dx
    """
    require(0 <= k <= spec.m, "lambda_bessel needs 0 <= k <= m")
    kappa = spec.kappa

    def integrand(x: np.ndarray) -> np.ndarray:
        j = bessel_j(float(k), x)
        return x * j * j

    value = integrate_panels(integrand, 0.0, kappa, 0.5 * math.pi, order=16)
    return max(value / (2.0 * math.pi * kappa * kappa), FLOOR)


def bessel_tail_bound(k: int, kappa: float) -> float:
    """
    exp(-c k^(1/2)) / kappa^2 with c = calibration 'sphere_tail_decay'

    Bounds lambda_bessel(k) once k >= 2 kappa.
    """
    require(k >= 0 and kappa > 0, "bessel_tail_bound needs k >= 0 and kappa > 0")
    return math.exp(-calibrated('sphere_tail_decay') * math.sqrt(k)) / (kappa * kappa)


def lambda_bessel_all(spec: SphereSpec, threads: Optional[int] = 1) -> np.ndarray:
    ks = range(spec.m + 1)
    workers = min(resolve_threads(threads), spec.m + 1)
    if workers <= 1:
        return np.array([lambda_bessel(spec, k) for k in ks])
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return np.array(list(executor.map(lambda k: lambda_bessel(spec, k), ks)))


def semicircle_prediction(k: int, kappa: float) -> float:
    """
    (1 / (2 pi^2 kappa)) sqrt(1 - (k / kappa)^2), zero for k >= kappa

    Example:
        >>> semicircle_prediction(10, 10.0)
        0.0
    """
    require(k >= 0 and kappa > 0, "semicircle_prediction needs k >= 0 and kappa > 0")
    if k >= kappa:
        return 0.0
    return math.sqrt(1.0 - (k / kappa) ** 2) / (2.0 * math.pi ** 2 * kappa)


def _paired(values: np.ndarray) -> Spectrum:
    return Spectrum(np.concatenate([values[:1], values[1:], values[1:]]))


def spectrum(spec: SphereSpec, method: str = EXACT, threads: Optional[int] = 1) -> Spectrum:
    """The 2m + 1 paired eigenvalues as a Spectrum"""
    if method == EXACT:
        values = lambda_exact_all(spec)
    elif method == BESSEL:
        values = lambda_bessel_all(spec, threads)
    else:
        raise DomainError(f"Unknown spectrum method '{method}'. Valid methods: {', '.join(METHODS)}")
    logging.debug(f"S2 spectrum m={spec.m} kappa={spec.kappa:g} ({method}): "
                  f"lambda_0 = {values[0]:.6e}")
    return _paired(values)


def moment_sum_asymptotic(p: int, kappa: float) -> float:
    """
    Main term (2 / (2 pi^2)^p) kappa^(1-p) int_0^1 (1 - u^2)^(p/2) du of sum lambda^p

    The integral is B(1/2, p/2 + 1) / 2.
    """
    require(2 <= p <= 10, "moment_sum_asymptotic needs 2 <= p <= 10")
    require(kappa > 0, "moment_sum_asymptotic needs kappa > 0")
    return 2.0 / (2.0 * math.pi ** 2) ** p * kappa ** (1 - p) * 0.5 * beta(0.5, 0.5 * p + 1.0)


def semicircle_table(spec: SphereSpec) -> List[Tuple[int, float, float, float]]:
    """Rows (k, lambda_exact, lambda_bessel, semicircle_prediction) for k = 0..m"""
    exact = lambda_exact_all(spec)
    return [
        (k, float(exact[k]), lambda_bessel(spec, k), semicircle_prediction(k, spec.kappa))
        for k in range(spec.m + 1)
    ]


def lambda0_share(spec: Spectrum) -> float:
    """Share lambda_max / sum lambda of the leading eigenvalue"""
    return spec.lambda_max / spec.power_sum(1)
