"""
Direct synthesis of random degree-m waves on S^2
Brute-force cap energies for checking the diagonalized sampler
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from ..kernel.trace import cap_volume
from ..sphere2.legendre import normalized_legendre
from ..utils.streams import sample_blocks
from ..utils.validators import QuadratureError, require

MAX_DEGREE = 32
MIN_SAMPLES = 100
SELF_CHECK_TOLERANCE = 1.e-6
# waves synthesized per matrix product
_SYNTHESIS_CHUNK = 256


def real_harmonics(m: int, x: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """
    Orthonormal real spherical harmonics of degree m on the grid x (x) phi

    Columns: P_m^0 / sqrt(2 pi), then P_m^k cos(k phi) / sqrt(pi) and
    P_m^k sin(k phi) / sqrt(pi) for k = 1..m.

    Returns:
        Array of shape (len(x) * len(phi), 2m + 1)
    """
    p = normalized_legendre(m, x)
    columns = [np.outer(p[0], np.ones_like(phi)).ravel() / math.sqrt(2.0 * math.pi)]
    for k in range(1, m + 1):
        columns.append(np.outer(p[k], np.cos(k * phi)).ravel() / math.sqrt(math.pi))
        columns.append(np.outer(p[k], np.sin(k * phi)).ravel() / math.sqrt(math.pi))
    return np.stack(columns, axis=1)


def cap_grid(m: int, z_min: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Product rule on {cos theta >= z_min}: Gauss-Legendre in cos theta times a uniform azimuth

    Order 4m in each factor (at least 8).

    Returns:
        (x, phi, weights) with weights flattened to match real_harmonics rows
    """
    order = max(8, 4 * m)
    ref_x, ref_w = leggauss(order)
    half = 0.5 * (1.0 - z_min)
    x = z_min + half * (ref_x + 1.0)
    phi = 2.0 * math.pi * np.arange(order) / order
    weights = np.outer(half * ref_w, np.full(order, 2.0 * math.pi / order)).ravel()
    return x, phi, weights


def direct_cap_energy(
    m: int,
    r: float,
    seed: int,
    n_samples: int,
    threads: Optional[int] = 1
) -> np.ndarray:
    """
    (1 / vol(B)) int_B phi^2 for random phi = sum c_j Y_j, c_j ~ N(0, 1/(2m + 1))

    Each wave is synthesized on the cap grid and on a full-sphere grid; the
    full-sphere integral must equal sum c_j^2.

    Raises:
        QuadratureError: If the full-sphere self-check fails
    """
    require(1 <= m <= MAX_DEGREE, f"direct_cap_energy needs 1 <= m <= {MAX_DEGREE}")
    require(0 < r <= math.pi, "direct_cap_energy needs 0 < r <= pi")
    require(n_samples >= MIN_SAMPLES, f"direct_cap_energy needs n_samples >= {MIN_SAMPLES}")

    x, phi, w_cap = cap_grid(m, math.cos(r))
    basis_cap = real_harmonics(m, x, phi)
    x, phi, w_full = cap_grid(m, -1.0)
    basis_full = real_harmonics(m, x, phi)
    volume = cap_volume(r)
    dim = 2 * m + 1

    def draw(rng: np.random.Generator, rows: int) -> np.ndarray:
        c = rng.standard_normal((rows, dim)) / math.sqrt(dim)
        cap_energy = np.empty(rows)
        full_energy = np.empty(rows)
        for start in range(0, rows, _SYNTHESIS_CHUNK):
            part = c[start:start + _SYNTHESIS_CHUNK]
            cap_energy[start:start + len(part)] = (part @ basis_cap.T) ** 2 @ w_cap
            full_energy[start:start + len(part)] = (part @ basis_full.T) ** 2 @ w_full
        error = float(np.max(np.abs(full_energy - np.sum(c * c, axis=1))))
        if error > SELF_CHECK_TOLERANCE:
            raise QuadratureError(f"direct_cap_energy self-check failed: full-sphere "
                                  f"integral off by {error:.3e}")
        return cap_energy / volume

    values = sample_blocks(seed, n_samples, dim, draw, threads)
    logging.debug(f"direct_cap_energy m={m} r={r:g}: {n_samples} waves, mean {values.mean():.6e}")
    return values
