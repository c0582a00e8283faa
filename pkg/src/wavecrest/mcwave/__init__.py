"""
Monte Carlo verification
Standardized samples, KS distances, characteristic functions, tail
frequencies and direct wave synthesis on S^2
"""

from .results import (
    CharfnPoint, TailRow, MCResult, CHARFN_COLUMNS, TAIL_COLUMNS,
    charfn_table, tail_table, write_charfn_csv, write_tail_csv
)
from .experiments import (
    sample_standardized, restandardize, empirical_charfn, ks_distance,
    clt_experiment, clopper_pearson_upper, tail_experiment, fit_tail_exponent
)
from .direct import real_harmonics, cap_grid, direct_cap_energy

__all__ = [
    'CharfnPoint',
    'TailRow',
    'MCResult',
    'CHARFN_COLUMNS',
    'TAIL_COLUMNS',
    'charfn_table',
    'tail_table',
    'write_charfn_csv',
    'write_tail_csv',
    'sample_standardized',
    'restandardize',
    'empirical_charfn',
    'ks_distance',
    'clt_experiment',
    'clopper_pearson_upper',
    'tail_experiment',
    'fit_tail_exponent',
    'real_harmonics',
    'cap_grid',
    'direct_cap_energy',
]
