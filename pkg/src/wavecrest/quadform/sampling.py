"""
Monte Carlo draws of Gaussian quadratic forms
"""

from typing import Optional

import numpy as np

from ..utils.streams import sample_blocks
from ..utils.validators import require
from .spectrum import Spectrum


def sample_qf(spec: Spectrum, seed: int, count: int, threads: Optional[int] = 1) -> np.ndarray:
    """
    count draws of sum_j lambda_j g_j^2

    Deterministic in (seed, count); the thread count only changes speed.
    """
    require(count >= 1, "sample_qf needs count >= 1")
    lam = spec.lambdas

    def draw(rng: np.random.Generator, rows: int) -> np.ndarray:
        g = rng.standard_normal((rows, lam.size))
        return (g * g) @ lam

    return sample_blocks(seed, count, lam.size, draw, threads)
