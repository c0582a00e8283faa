"""
Monte Carlo experiments on the standardized local energy
"""

import logging
from typing import Dict, Optional, Sequence

import numpy as np
from scipy import stats

from .. import version_string
from ..quadform.chernoff import two_sided_chernoff
from ..quadform.sampling import sample_qf
from ..quadform.spectrum import Spectrum
from ..quadform.statistics import qf_charfn_standardized
from ..utils.streams import GENERATOR_NAME
from ..utils.validators import require
from .results import CharfnPoint, MCResult, TailRow

MIN_SAMPLES = 1000
MIN_TAIL_SAMPLES = 100_000


def _metadata() -> Dict[str, str]:
    return {'generator': GENERATOR_NAME, 'version': version_string()}


def sample_standardized(spec: Spectrum, n_samples: int, seed: int,
                        threads: Optional[int] = 1) -> np.ndarray:
    """(X - sum lambda) / sqrt(2 sum lambda^2) for n_samples draws of X"""
    require(n_samples >= MIN_SAMPLES, f"sample_standardized needs n_samples >= {MIN_SAMPLES}")
    x = sample_qf(spec, seed, n_samples, threads)
    return (x - spec.power_sum(1)) / spec.sigma


def restandardize(samples: np.ndarray) -> np.ndarray:
    """Shift and scale samples to empirical mean 0 and variance 1"""
    samples = np.asarray(samples, dtype=float)
    return (samples - samples.mean()) / samples.std()


def empirical_charfn(samples: np.ndarray, t: float) -> complex:
    """Sample mean of exp(i t Z)"""
    return complex(np.mean(np.exp(1j * t * np.asarray(samples))))


def ks_distance(samples: np.ndarray) -> float:
    """Kolmogorov-Smirnov distance between the empirical CDF and the standard normal CDF"""
    return float(stats.kstest(np.asarray(samples), 'norm').statistic)


def clt_experiment(
    spec: Spectrum,
    n_samples: int,
    seed: int,
    t_grid: Sequence[float],
    threads: Optional[int] = 1
) -> MCResult:
    """
    KS distance to N(0, 1) and the characteristic function on t_grid

    Raises:
        DomainError: If some t lies outside the characteristic-function series domain
    """
    exact = {t: qf_charfn_standardized(spec, t) for t in t_grid}
    z = sample_standardized(spec, n_samples, seed, threads)
    grid = [
        CharfnPoint(float(t), empirical_charfn(z, t), exact[t], float(np.exp(-0.5 * t * t)))
        for t in t_grid
    ]
    ks = ks_distance(z)
    logging.info(f"CLT experiment: {n_samples} samples, seed {seed}, KS distance {ks:.4f}")
    return MCResult(n_samples, seed, ks, grid, [], _metadata())


def clopper_pearson_upper(count: int, n: int, level: float = 0.95) -> float:
    """One-sided upper confidence bound on a binomial probability"""
    if count >= n:
        return 1.0
    return float(stats.beta.ppf(level, count + 1, n - count))


def tail_experiment(
    spec: Spectrum,
    n_samples: int,
    seed: int,
    y_grid: Sequence[float],
    threads: Optional[int] = 1
) -> MCResult:
    """
    Two-sided exceedance frequencies P(|X - E[X]| >= y sigma) against Chernoff bounds

    The bound at each y is the upper-tail plus lower-tail Chernoff bound at
    epsilon = y sigma.
    """
    require(all(y > 0 for y in y_grid), "tail_experiment needs positive y values")
    if any(y <= 3 for y in y_grid):
        require(n_samples >= MIN_TAIL_SAMPLES,
                f"tail_experiment needs n_samples >= {MIN_TAIL_SAMPLES} for y <= 3")
    z = sample_standardized(spec, n_samples, seed, threads)
    sigma = spec.sigma
    rows = []
    for y in y_grid:
        count = int(np.count_nonzero(np.abs(z) >= y))
        rows.append(TailRow(
            y=float(y),
            frequency=count / n_samples,
            chernoff=two_sided_chernoff(spec, y * sigma),
            upper_95=clopper_pearson_upper(count, n_samples),
        ))
        logging.debug(f"tail y={y:g}: {count} exceedances, bound {rows[-1].chernoff:.4e}")
    return MCResult(n_samples, seed, ks_distance(z), [], rows, _metadata())


def fit_tail_exponent(rows: Sequence[TailRow]) -> float:
    """Slope of log frequency against y^2 over rows with observed exceedances"""
    used = [r for r in rows if r.frequency > 0]
    require(len(used) >= 2, "fit_tail_exponent needs two rows with exceedances")
    y2 = np.array([r.y ** 2 for r in used])
    logf = np.log([r.frequency for r in used])
    return float(np.polyfit(y2, logf, 1)[0])
