"""
Bessel cross integrals and the assembled third-moment bound
"""

import logging
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import gammaln

from ..specfun.bessel import X_MAX, bessel_j, normalized_kernel
from ..specfun.calibration import calibrated
from ..utils.estimates import MonteCarloEstimate, check_budget, loglog_slope, summarize, uniform_ball
from ..utils.quadrature import panel_rule, panels_for_width
from ..utils.streams import resolve_threads, sample_blocks
from ..utils.validators import TruncationWarning, require

CROSS_ORDER = 20
TAIL_TOLERANCE = 1.e-12
MIN_MC_BUDGET = 10_000
MAX_RELATIVE_ERROR = 0.10
ESTIMATE_FLOOR = 1.e-8
_ORDERS_PER_CHUNK = 32


def _cross_rule(X: float) -> Tuple[np.ndarray, np.ndarray]:
    # panels of width pi, the zero spacing of the integrand at large u
    return panel_rule(0.0, X, panels_for_width(0.0, X, math.pi), CROSS_ORDER)


def bessel_cross_integral(nu: float, m: float, X: float) -> float:
    """
    Signed integral of u J_nu(u) J_m(u) over [0, X]

    Example:
        >>> bessel_cross_integral(0.0, 0.0, 10.0) > 0
        True
    """
    require(nu >= 0 and m >= nu, "bessel_cross_integral needs 0 <= nu <= m")
    require(0 < X <= 1.e5, "bessel_cross_integral needs 0 < X <= 1e5")
    u, w = _cross_rule(X)
    return float(np.dot(w, u * bessel_j(nu, u) * bessel_j(m, u)))


def cross_decay_bound(m: float) -> float:
    """exp(-c m^(1/2)), c = calibration 'bessel_cross_decay'; bounds |bessel_cross_integral| for m > 2 X"""
    require(m >= 0, "cross_decay_bound needs m >= 0")
    return math.exp(-calibrated('bessel_cross_decay') * math.sqrt(m))


def default_k_max(rT: float) -> int:
    """ceil(X + 20 + 10 X^(1/3)) with X = 2 rT: past the turning window of J_(nu+k)(X)"""
    X = 2.0 * rT
    return int(math.ceil(X + 20.0 + 10.0 * X ** (1.0 / 3.0)))


def cross_integrals(nu: float, X: float, k_max: int, threads: Optional[int] = 1) -> np.ndarray:
    """g(k) = int_0^X u J_nu J_(nu+k) du for k = 0..k_max, computed in ordered chunks of k"""
    u, w = _cross_rule(X)
    base = w * u * bessel_j(nu, u)
    chunks = [np.arange(start, min(start + _ORDERS_PER_CHUNK, k_max + 1))
              for start in range(0, k_max + 1, _ORDERS_PER_CHUNK)]

    def run(ks: np.ndarray) -> np.ndarray:
        return bessel_j(nu + ks[:, None].astype(float), u[None, :]) @ base

    workers = min(resolve_threads(threads), len(chunks))
    if workers <= 1:
        parts = [run(ks) for ks in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(run, chunks))
    return np.concatenate(parts)


def _prefactor(n: int, rT: float) -> float:
    # n^2 c_n^3 2^nu Gamma(nu) (rT)^(-2n), c_n = 2^nu Gamma(nu + 1)
    nu = 0.5 * n - 1.0
    log_c = nu * math.log(2.0) + gammaln(nu + 1.0)
    log_front = 2.0 * math.log(n) + 3.0 * log_c + nu * math.log(2.0) + gammaln(nu)
    return math.exp(log_front - 2.0 * n * math.log(rT))


def third_moment_terms(n: int, rT: float, k_max: Optional[int] = None,
                       threads: Optional[int] = 1) -> np.ndarray:
    """
    Summands of the third-moment bound, prefactor included

    Term 0 is nu g(0)^2; term k >= 1 is (nu + k) C k^(n/2 - 3) g(k)^2 with
    C = calibration 'cap_integral' and X = 2 rT (offset w = 1, the worst case).
    """
    require(int(n) == n and n >= 3, "third_moment_bound needs an integer n >= 3")
    require(rT > 0, "third_moment_bound needs rT > 0")
    X = 2.0 * rT
    require(X <= X_MAX, "third_moment_bound needs 2 rT within the Bessel envelope")
    if k_max is None:
        k_max = default_k_max(rT)
    require(k_max >= math.ceil(X) + 20, "third_moment_bound needs k_max >= ceil(2 rT) + 20")

    nu = 0.5 * n - 1.0
    g = cross_integrals(nu, X, int(k_max), threads)
    k = np.arange(int(k_max) + 1, dtype=float)
    weights = np.empty_like(k)
    weights[0] = nu
    weights[1:] = (nu + k[1:]) * calibrated('cap_integral') * k[1:] ** (0.5 * n - 3.0)
    return _prefactor(n, rT) * weights * g * g


def third_moment_bound(n: int, rT: float, k_max: Optional[int] = None,
                       threads: Optional[int] = 1) -> float:
    """
    Upper bound on the normalized third moment of the local energy

    The log-log slope in rT is about -3.7 for n = 3 against the asymptotic
    -(3n - 2)/2. For larger n the fit is looser and steeper (about -5.5 at
    n = 4 and -7.3 at n = 5), so only n = 3 is held to the asymptotic
    slope; other n only to decaying at least that fast.

    Emits TruncationWarning when the last summand exceeds 1e-12 of the total.
    """
    terms = third_moment_terms(n, rT, k_max, threads)
    total = float(np.sum(terms))
    if terms[-1] > TAIL_TOLERANCE * total:
        message = (f"third_moment_bound(n={n}, rT={rT:g}): last term {terms[-1]:.3e} "
                   f"exceeds {TAIL_TOLERANCE:g} of the total {total:.3e}; raise k_max")
        logging.warning(message)
        warnings.warn(message, TruncationWarning)
    return total


def third_moment_mc(
    n: int,
    rT: float,
    budget: int,
    seed: int = 0,
    threads: Optional[int] = 1
) -> MonteCarloEstimate:
    """
    Normalized triple integral of J(T|x1-x2|) J(T|x2-x3|) J(T|x3-x1|) over the ball

    Raises:
        DomainError: If budget < 10^4
        BudgetError: If std_error > 10% of |estimate| while |estimate| > 1e-8
    """
    require(int(n) == n and n >= 2 and rT > 0, "third_moment_mc needs n >= 2 and rT > 0")
    require(budget >= MIN_MC_BUDGET, f"third_moment_mc needs budget >= {MIN_MC_BUDGET}")

    def draw(rng: np.random.Generator, rows: int) -> np.ndarray:
        x = uniform_ball(rng, (rows, 3), n)
        product = np.ones(rows)
        for i in range(3):
            d = np.linalg.norm(x[:, i] - x[:, (i + 1) % 3], axis=1)
            product *= np.asarray(normalized_kernel(n, rT * d))
        return product

    result = summarize(sample_blocks(seed, budget, 3 * (n + 1), draw, threads), seed)
    logging.debug(f"third_moment_mc n={n} rT={rT}: {result.estimate:.6e} +/- {result.std_error:.2e}")
    return check_budget(result, MAX_RELATIVE_ERROR, floor=ESTIMATE_FLOOR)


@dataclass(frozen=True)
class ThirdMomentRow:
    n: int
    rT: float
    k_max: int
    bound: float
    mc_estimate: float
    mc_std_error: float
    seed: int


@dataclass(frozen=True)
class ThirdMomentSweep:
    rows: List[ThirdMomentRow]
    slope: float


def third_moment_sweep(
    n: int,
    rT_values: Sequence[float],
    budget: int,
    seed: int = 0,
    k_max: Optional[int] = None,
    threads: Optional[int] = 1
) -> ThirdMomentSweep:
    """Bound and Monte Carlo value over a grid of rT, with the bound's log-log slope"""
    rows = []
    for rT in rT_values:
        kk = k_max or default_k_max(rT)
        bound = third_moment_bound(n, rT, kk, threads)
        mc = third_moment_mc(n, rT, budget, seed, threads)
        logging.info(f"third moment n={n} rT={rT:g}: bound {bound:.4e}, "
                     f"MC {mc.estimate:.4e} +/- {mc.std_error:.1e}")
        rows.append(ThirdMomentRow(n, float(rT), kk, bound, mc.estimate, mc.std_error, seed))
    slope = loglog_slope([r.rT for r in rows], [r.bound for r in rows])
    return ThirdMomentSweep(rows, slope)
