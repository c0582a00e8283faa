"""
Concentric spherical caps and the Gegenbauer cap integral

Cap measures are normalized: the full sphere S^(n-1) has measure 1.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy.special import gammaln

from ..specfun.polynomials import cap_definite_integral, gegenbauer
from ..utils.estimates import MonteCarloEstimate, summarize, uniform_sphere
from ..utils.quadrature import panel_rule
from ..utils.streams import sample_blocks
from ..utils.validators import require

# Gauss-Legendre points per smooth piece of the (a, psi) reduction
_PIECE_ORDER = 24
_PIECE_PANELS = 4


def cap_threshold(w: float, u_over_rT: float) -> float:
    """
    Cosine threshold ((u/rT)^2 + w^2 - 1) / (2 w u/rT) of the angular cap, clamped to [-1, 1]

    -1 means the full sphere, +1 the empty cap. A centered ball (w = 0)
    gives the full sphere for u/rT <= 1 and the empty cap otherwise.

    Example:
        >>> round(cap_threshold(0.5, 1.2), 12)
        0.575
    """
    require(0.0 <= w <= 1.0, "cap_threshold needs 0 <= w <= 1")
    require(0.0 < u_over_rT <= 1.0 + w + 1e-12, "cap_threshold needs 0 < u/rT <= 1 + w")
    if w == 0.0:
        return -1.0 if u_over_rT <= 1.0 else 1.0
    value = (u_over_rT ** 2 + w ** 2 - 1.0) / (2.0 * w * u_over_rT)
    return min(1.0, max(-1.0, value))


@dataclass(frozen=True)
class CapPair:
    """
    Scaled geometry of two concentric caps

    w: center offset over r; u, v: scaled distances; rT: scale
    """
    w: float
    u: float
    v: float
    rT: float

    def __post_init__(self):
        require(0.0 <= self.w <= 1.0, "CapPair needs 0 <= w <= 1")
        require(self.rT > 0 and self.u > 0 and self.v > 0, "CapPair needs u, v, rT > 0")
        limit = (1.0 + self.w) * self.rT * (1.0 + 1e-12)
        require(self.u <= limit and self.v <= limit, "CapPair needs u, v <= (1 + w) rT")

    @classmethod
    def from_thresholds(cls, t_a: float, t_b: float, w: float = 0.5, rT: float = 1.0) -> 'CapPair':
        """Caps with the given cosine thresholds at offset w (inverse of cap_threshold)"""
        require(0.0 < w <= 1.0, "from_thresholds needs 0 < w <= 1")
        return cls(w, _radius_for(w, t_a) * rT, _radius_for(w, t_b) * rT, rT)

    @property
    def thresholds(self) -> Tuple[float, float]:
        return cap_threshold(self.w, self.u / self.rT), cap_threshold(self.w, self.v / self.rT)

    def swapped(self) -> 'CapPair':
        return CapPair(self.w, self.v, self.u, self.rT)


def _radius_for(w: float, t: float) -> float:
    # positive root x of x^2 - 2 w t x + w^2 - 1 = 0
    return w * t + math.sqrt(max(0.0, w * w * t * t - w * w + 1.0))


def sphere_area(d: int) -> float:
    """Surface measure of S^d in R^(d+1); S^0 has two points"""
    return 2.0 * math.exp(0.5 * (d + 1) * math.log(math.pi) - gammaln(0.5 * (d + 1)))


def _pieces(a: float, b: float, cuts: List[float]) -> List[Tuple[float, float]]:
    points = sorted({a, b, *[c for c in cuts if a < c < b]})
    return [(lo, hi) for lo, hi in zip(points, points[1:]) if hi > lo]


def _rule(a: float, b: float, cuts: List[float]) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = [], []
    for lo, hi in _pieces(a, b, cuts):
        x, wt = panel_rule(lo, hi, _PIECE_PANELS, _PIECE_ORDER)
        nodes.append(x)
        weights.append(wt)
    return np.concatenate(nodes), np.concatenate(weights)


def cap_gegenbauer_integral(n: int, k: int, caps: CapPair) -> float:
    """
    Double integral of C_k^nu(alpha . beta) over alpha in cap a, beta in cap b, nu = n/2 - 1

    The smaller cap is taken as the outer variable. For alpha at polar angle
    a from the common center, the inner integral over the larger cap is, in
    polar coordinates (theta, psi) around alpha, an interval in theta, so it
    reduces to the closed-form cap_definite_integral at the interval ends.
    The outer (a, psi) integral uses Gauss-Legendre pieces split at the
    kinks of the interval endpoints.
    """
    require(int(n) == n and n >= 3, "cap_gegenbauer_integral needs an integer n >= 3")
    require(int(k) == k and k >= 1, "cap_gegenbauer_integral needs an integer k >= 1")
    nu = 0.5 * n - 1.0
    t_small, t_large = sorted(caps.thresholds, reverse=True)
    if t_small >= 1.0 or t_large <= -1.0:
        return 0.0

    c = t_large
    a_max = math.acos(t_small)
    b = math.acos(c)
    a_nodes, a_weights = _rule(0.0, a_max, [b, math.pi - b, 0.5 * math.pi])

    total = 0.0
    for a, wa in zip(a_nodes, a_weights):
        A = math.cos(a)
        sin_a = math.sin(a)
        cuts = [0.5 * math.pi]
        if sin_a > 0 and A * A < c * c:
            cos_star = math.sqrt((c * c - A * A) / (sin_a * sin_a))
            if cos_star < 1.0:
                cuts += [math.acos(cos_star), math.acos(-cos_star)]
        psi, wpsi = _rule(0.0, math.pi, cuts)
        h = _inner(k, nu, c, A, sin_a * np.cos(psi))
        total += wa * sin_a ** (n - 2) * float(np.dot(wpsi, np.sin(psi) ** (n - 3) * h))

    front = sphere_area(n - 2) * sphere_area(n - 3) / sphere_area(n - 1) ** 2
    return front * total


def _inner(k: int, nu: float, c: float, A: float, B: np.ndarray) -> np.ndarray:
    # integral of C_k(cos theta) sin^(2 nu) theta over theta in [0, pi]
    # with A cos theta + B sin theta >= c
    R = np.sqrt(A * A + B * B)
    h = np.zeros_like(B)
    live = R > -c
    if not np.any(live):
        return h
    ratio = np.clip(c / R[live], -1.0, 1.0)
    delta = np.arccos(ratio)
    phi0 = np.arctan2(B[live], A)
    upper = np.minimum(math.pi, phi0 + delta)
    value = np.asarray(cap_definite_integral(k, nu, upper))
    wrapped = phi0 - delta + 2.0 * math.pi
    second = wrapped < math.pi
    if np.any(second):
        value[second] -= np.asarray(cap_definite_integral(k, nu, wrapped[second]))
    h[live] = value
    return h


def cap_gegenbauer_integral_mc(
    n: int,
    k: int,
    caps: CapPair,
    samples: int,
    seed: int = 0,
    threads: Optional[int] = 1
) -> MonteCarloEstimate:
    """Monte Carlo oracle: mean of 1_a(alpha) 1_b(beta) C_k^nu(alpha . beta) over uniform pairs"""
    nu = 0.5 * n - 1.0
    t_a, t_b = caps.thresholds

    def draw(rng: np.random.Generator, rows: int) -> np.ndarray:
        points = uniform_sphere(rng, (rows, 2), n)
        alpha, beta = points[:, 0], points[:, 1]
        inside = (alpha[:, 0] >= t_a) & (beta[:, 0] >= t_b)
        dots = np.clip(np.einsum('ij,ij->i', alpha, beta), -1.0, 1.0)
        return np.where(inside, np.asarray(gegenbauer(k, nu, dots)), 0.0)

    return summarize(sample_blocks(seed, samples, 2 * n, draw, threads), seed)
