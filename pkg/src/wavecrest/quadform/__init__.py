"""
Gaussian quadratic forms
Spectra, exact moments, MGF and characteristic function, CLT criteria,
Chernoff tail bounds and sampling
"""

from .spectrum import Spectrum, write_spectrum, read_spectrum
from .statistics import (
    qf_mean, qf_variance, qf_mgf, qf_charfn_standardized, charfn_radius,
    lyapunov_ratio, clt_error_bound, gaussian_charfn_gap_bound
)
from .chernoff import ChernoffReport, chernoff_tail, chernoff_lower_tail, two_sided_chernoff
from .sampling import sample_qf

__all__ = [
    'Spectrum',
    'write_spectrum',
    'read_spectrum',
    'qf_mean',
    'qf_variance',
    'qf_mgf',
    'qf_charfn_standardized',
    'charfn_radius',
    'lyapunov_ratio',
    'clt_error_bound',
    'gaussian_charfn_gap_bound',
    'ChernoffReport',
    'chernoff_tail',
    'chernoff_lower_tail',
    'two_sided_chernoff',
    'sample_qf',
]
