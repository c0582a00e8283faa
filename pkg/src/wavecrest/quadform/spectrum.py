"""
Spectrum
Eigenvalues of a positive definite local-energy quadratic form
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from ..utils.csv_io import read_rows, write_rows
from ..utils.validators import require

# Relative slack allowed in the p-norm monotonicity check
_NORM_RTOL = 1.e-12


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    Descending multiset of positive eigenvalues

    The constructor sorts its input, rejects non-positive or non-finite
    values, and checks that the p-norms decrease for p = 2, 3, 4.

    Example:
        >>> Spectrum.from_values([0.2, 0.3]).lambdas.tolist()
        [0.3, 0.2]
    """
    lambdas: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.lambdas, dtype=float).ravel()
        require(values.size >= 1, "Spectrum needs at least one eigenvalue")
        require(bool(np.all(np.isfinite(values))), "Spectrum eigenvalues must be finite")
        require(bool(np.all(values > 0)), "Spectrum eigenvalues must be positive")
        values = np.sort(values)[::-1].copy()
        values.setflags(write=False)
        object.__setattr__(self, 'lambdas', values)

        norms = [self.p_norm(p) for p in (2, 3, 4)]
        for lower, higher in zip(norms, norms[1:]):
            require(higher <= lower * (1.0 + _NORM_RTOL), "Spectrum p-norms are not monotone")

    @classmethod
    def from_values(cls, values: Iterable[float]) -> 'Spectrum':
        return cls(np.fromiter(values, dtype=float))

    @classmethod
    def uniform(cls, n: int) -> 'Spectrum':
        """n equal eigenvalues 1/n (normalized chi-square)"""
        require(n >= 1, "Spectrum.uniform needs n >= 1")
        return cls(np.full(n, 1.0 / n))

    def __len__(self) -> int:
        return int(self.lambdas.size)

    @property
    def lambda_max(self) -> float:
        return float(self.lambdas[0])

    def power_sum(self, p: int) -> float:
        """tr(A^p) = sum of lambda_j^p"""
        return float(np.sum(self.lambdas ** p))

    def p_norm(self, p: int) -> float:
        """(sum lambda^p)^(1/p), scaled by lambda_max so small spectra do not underflow"""
        top = self.lambda_max
        return top * float(np.sum((self.lambdas / top) ** p)) ** (1.0 / p)

    @property
    def sigma(self) -> float:
        """Standard deviation sqrt(2 sum lambda^2) of the quadratic form"""
        return float(np.sqrt(2.0 * self.power_sum(2)))


def write_spectrum(spec: Spectrum, path: Union[str, Path]) -> Path:
    """One eigenvalue per line under a 'lambda' header, 17 significant digits"""
    return write_rows(path, ['lambda'], ([v] for v in spec.lambdas))


def read_spectrum(path: Union[str, Path]) -> Spectrum:
    return Spectrum.from_values(float(row['lambda']) for row in read_rows(path))
