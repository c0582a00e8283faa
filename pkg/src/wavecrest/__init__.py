"""
wavecrest - random-wave central limit laboratory

Numerical checks of the Gaussian limit for local energies of random
band-limited waves: special functions, quadratic-form statistics, kernel
moments, spherical cap spectra and Monte Carlo experiments.
"""

__version__ = '1.0.0'


def version_string() -> str:
    """Version tag written into every result row"""
    return f"v{__version__}"


from . import utils
from . import patterns
from . import specfun
from . import quadform
from . import kernel
from . import trimoment
from . import sphere2
from . import mcwave

__all__ = [
    'utils', 'patterns', 'specfun', 'quadform', 'kernel',
    'trimoment', 'sphere2', 'mcwave', 'version_string', '__version__'
]
