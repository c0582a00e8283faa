"""
Third moment of the local energy
Cap geometry, the Gegenbauer cap integral, Bessel cross integrals, the
assembled bound and its Monte Carlo oracle
"""

from .caps import (
    cap_threshold, CapPair, sphere_area, cap_gegenbauer_integral, cap_gegenbauer_integral_mc
)
from .bound import (
    bessel_cross_integral, cross_decay_bound, cross_integrals, default_k_max, third_moment_terms,
    third_moment_bound, third_moment_mc, ThirdMomentRow, ThirdMomentSweep,
    third_moment_sweep
)

__all__ = [
    'cap_threshold',
    'CapPair',
    'sphere_area',
    'cap_gegenbauer_integral',
    'cap_gegenbauer_integral_mc',
    'bessel_cross_integral',
    'cross_decay_bound',
    'cross_integrals',
    'default_k_max',
    'third_moment_terms',
    'third_moment_bound',
    'third_moment_mc',
    'ThirdMomentRow',
    'ThirdMomentSweep',
    'third_moment_sweep',
]
