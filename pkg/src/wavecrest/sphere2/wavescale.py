"""
Wave-scale diagnostics
At fixed kappa the Lyapunov ratio does not decay with m; with kappa = sqrt(m) it does.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..quadform.statistics import lyapunov_ratio
from ..utils.estimates import loglog_slope
from ..utils.validators import require
from .spectra import SphereSpec, lambda0_share, spectrum

RATIO_FLOOR = 0.1


def wave_scale_diagnostic(c: float, m_list: Sequence[int]) -> List[Tuple[int, float]]:
    """
    (m, lyapunov_ratio) for spectra at the fixed scale kappa = c

    A ratio below RATIO_FLOOR is logged as a warning.
    """
    require(0 < c <= 10, "wave_scale_diagnostic needs 0 < c <= 10")
    rows = []
    for m in m_list:
        ratio = lyapunov_ratio(spectrum(SphereSpec.from_kappa(m, c)))
        if ratio <= RATIO_FLOOR:
            logging.warning(f"wave scale kappa={c:g}, m={m}: Lyapunov ratio {ratio:.4f} "
                            f"fell to the floor {RATIO_FLOOR}")
        rows.append((int(m), ratio))
    return rows


def wave_scale_shares(c: float, m_list: Sequence[int]) -> List[Tuple[int, float]]:
    """(m, lambda_0 share) at kappa = c"""
    return [(int(m), lambda0_share(spectrum(SphereSpec.from_kappa(m, c)))) for m in m_list]


@dataclass(frozen=True)
class ContrastResult:
    """(m, kappa, ratio) rows at kappa = sqrt(m) and the slope of ratio against kappa"""
    rows: List[Tuple[int, float, float]]
    slope: float


def wave_scale_contrast(m_list: Sequence[int]) -> ContrastResult:
    """Lyapunov ratios with kappa = sqrt(m) growing; the slope is near -1/2"""
    rows = []
    for m in m_list:
        kappa = math.sqrt(m)
        rows.append((int(m), kappa, lyapunov_ratio(spectrum(SphereSpec.from_kappa(m, kappa)))))
    return ContrastResult(rows, loglog_slope([r[1] for r in rows], [r[2] for r in rows]))
