"""
The S^2 case
Normalized associated Legendre functions, exact and Bessel cap spectra,
the semicircle law, moment sums and the wave-scale diagnostic
"""

from .legendre import normalized_legendre, cap_masses, sum_rule_target
from .spectra import (
    EXACT, BESSEL, SphereSpec, lambda_exact, lambda_exact_all, lambda_bessel,
    lambda_bessel_all, bessel_tail_bound, semicircle_prediction, spectrum, moment_sum_asymptotic,
    semicircle_table, lambda0_share
)
from .wavescale import (
    RATIO_FLOOR, wave_scale_diagnostic, wave_scale_shares, ContrastResult, wave_scale_contrast
)

__all__ = [
    'normalized_legendre',
    'cap_masses',
    'sum_rule_target',
    'EXACT',
    'BESSEL',
    'SphereSpec',
    'lambda_exact',
    'lambda_exact_all',
    'lambda_bessel',
    'lambda_bessel_all',
    'bessel_tail_bound',
    'semicircle_prediction',
    'spectrum',
    'moment_sum_asymptotic',
    'semicircle_table',
    'lambda0_share',
    'RATIO_FLOOR',
    'wave_scale_diagnostic',
    'wave_scale_shares',
    'ContrastResult',
    'wave_scale_contrast',
]
