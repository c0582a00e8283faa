"""
Euclidean kernel model
Weyl counts, the local Weyl law kernel, the second moment and cyclic
kernel integrals on S^2 caps
"""

from .model import WaveModel, ball_volume, weyl_count, kernel_value, kernel_envelope_constant
from .moments import (
    RADIAL_QUADRATURE, MONTE_CARLO, ball_overlap_fraction, distance_density,
    normalized_second_moment, second_moment_mc, second_moment, SweepResult,
    second_moment_sweep, bessel_square_average, bessel_square_average_closed_form
)
from .trace import cap_volume, cap_points, sphere_kernel, kernel_trace_integral

__all__ = [
    'WaveModel',
    'ball_volume',
    'weyl_count',
    'kernel_value',
    'kernel_envelope_constant',
    'RADIAL_QUADRATURE',
    'MONTE_CARLO',
    'ball_overlap_fraction',
    'distance_density',
    'normalized_second_moment',
    'second_moment_mc',
    'second_moment',
    'SweepResult',
    'second_moment_sweep',
    'bessel_square_average',
    'bessel_square_average_closed_form',
    'cap_volume',
    'cap_points',
    'sphere_kernel',
    'kernel_trace_integral',
]
