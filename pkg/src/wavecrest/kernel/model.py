"""
Euclidean two-point-function model
Weyl counts and the main term of the local Weyl law kernel
"""

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.special import gammaln

from ..specfun.bessel import normalized_kernel
from ..utils.validators import require

ArrayLike = Union[float, np.ndarray]


def ball_volume(n: int, r: float = 1.0) -> float:
    """
    Volume of the n-ball of radius r

    Example:
        >>> round(ball_volume(3), 12) == round(4 * math.pi / 3, 12)
        True
    """
    require(n >= 1 and r >= 0, "ball_volume needs n >= 1 and r >= 0")
    return math.exp(0.5 * n * math.log(math.pi) - gammaln(0.5 * n + 1.0)) * r ** n


@dataclass(frozen=True)
class WaveModel:
    """
    Parameters of the Euclidean model

    n: dimension; T: frequency; eta: spectral window; r: ball radius;
    vol_m: volume of the ambient manifold
    """
    n: int
    T: float
    eta: float
    r: float
    vol_m: float

    def __post_init__(self):
        require(int(self.n) == self.n and self.n >= 2, "WaveModel needs an integer n >= 2")
        require(self.T > 0 and self.eta > 0 and self.r > 0 and self.vol_m > 0,
                "WaveModel needs T, eta, r, vol_m > 0")
        require(self.eta <= math.sqrt(self.T), "WaveModel needs eta <= sqrt(T)")
        require(self.rT > 1, "WaveModel needs rT > 1")

    @property
    def rT(self) -> float:
        return self.r * self.T

    @property
    def ball_volume(self) -> float:
        return ball_volume(self.n, self.r)


def weyl_count(model: WaveModel) -> float:
    """Main term vol(M) |B_n| / (2 pi)^n * n T^(n-1) eta of the eigenvalue count"""
    n = model.n
    return model.vol_m * ball_volume(n) / (2.0 * math.pi) ** n * n * model.T ** (n - 1) * model.eta


def kernel_value(model: WaveModel, d: ArrayLike) -> ArrayLike:
    """
    Main term (N / vol(M)) * normalized_kernel(n, T d) of the projector kernel

    Raises:
        DomainError: For d outside [0, 2r]
    """
    d_arr = np.asarray(d, dtype=float)
    require(bool(np.all((d_arr >= 0) & (d_arr <= 2.0 * model.r))),
            f"kernel_value needs 0 <= d <= 2r = {2.0 * model.r}")
    value = weyl_count(model) / model.vol_m * np.asarray(normalized_kernel(model.n, model.T * d_arr))
    return float(value) if np.ndim(d) == 0 else value


def kernel_envelope_constant(n: int) -> float:
    """
    Leading constant of |kernel_value| (T d)^((n-1)/2) / (T^(n-1) eta) as T d grows

    |B_n| n / (2 pi)^n * 2^nu Gamma(nu + 1) sqrt(2 / pi), nu = n/2 - 1
    """
    nu = 0.5 * n - 1.0
    front = ball_volume(n) * n / (2.0 * math.pi) ** n
    return front * math.exp(nu * math.log(2.0) + gammaln(nu + 1.0)) * math.sqrt(2.0 / math.pi)
