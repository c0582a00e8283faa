"""
Utility modules for wavecrest
"""

from .json_encoder import NumpyEncoder, json_dumps_numpy
from .validators import (
    ValidationError, DomainError, ConfigError, BudgetError,
    QuadratureError, TruncationWarning, ExperimentValidator, require
)
from .quadrature import panel_rule, integrate_panels, adaptive_panels
from .streams import GENERATOR_NAME, block_layout, generators, sample_blocks
from .csv_io import format_value, write_rows, read_rows
from .estimates import (
    MonteCarloEstimate, summarize, check_budget, uniform_ball, uniform_sphere, loglog_slope
)

__all__ = [
    'NumpyEncoder',
    'json_dumps_numpy',
    'ValidationError',
    'DomainError',
    'ConfigError',
    'BudgetError',
    'QuadratureError',
    'TruncationWarning',
    'ExperimentValidator',
    'require',
    'panel_rule',
    'integrate_panels',
    'adaptive_panels',
    'GENERATOR_NAME',
    'block_layout',
    'generators',
    'sample_blocks',
    'format_value',
    'write_rows',
    'read_rows',
    'MonteCarloEstimate',
    'summarize',
    'check_budget',
    'uniform_ball',
    'uniform_sphere',
    'loglog_slope',
]
