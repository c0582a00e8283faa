"""
Special functions
Bessel functions and bounds, Gegenbauer/Jacobi polynomials, the cap
antiderivative, the addition formula and Szego's asymptotic
"""

from .calibration import CalibrationTable, calibrated, parse_calibration
from .bessel import (
    bessel_j, normalized_kernel, BesselRegime, BesselRegimeBound,
    bessel_bound, kapteyn_bound, classify, turning_window
)
from .polynomials import (
    rising_factorial, log_rising_factorial, gegenbauer_at_one, gegenbauer,
    gegenbauer_sequence, jacobi, jacobi_to_gegenbauer, cap_antiderivative,
    cap_definite_integral
)
from .asymptotics import (
    addition_formula_sum, addition_formula_residual, separation,
    szego_sides, szego_envelope
)

__all__ = [
    # Calibration
    'CalibrationTable',
    'calibrated',
    'parse_calibration',
    # Bessel
    'bessel_j',
    'normalized_kernel',
    'BesselRegime',
    'BesselRegimeBound',
    'bessel_bound',
    'kapteyn_bound',
    'classify',
    'turning_window',
    # Polynomials
    'rising_factorial',
    'log_rising_factorial',
    'gegenbauer_at_one',
    'gegenbauer',
    'gegenbauer_sequence',
    'jacobi',
    'jacobi_to_gegenbauer',
    'cap_antiderivative',
    'cap_definite_integral',
    # Asymptotics
    'addition_formula_sum',
    'addition_formula_residual',
    'separation',
    'szego_sides',
    'szego_envelope',
]
