"""
Numeric tolerances used across the package and their environment overrides.
"""
import logging
import math
import os

logger = logging.getLogger(__name__)

ZERO_TOL_ENV = 'HDX_ZERO_TOL'


class Tolerances(object):
    """
    Named tolerance table, any name without an explicit value falls back to
    the ``DEFAULT`` entry.
    """

    def __init__(self, default=1e-9, **named):
        """
        :param default: value returned for names that were never set
        :param named: initial named tolerances, like ``eig=1e-10``
        """
        self.tolerances = {'DEFAULT': default}
        for name, value in named.items():
            self.set(value, name)

    def get(self, name=None):
        """
        Get the tolerance for the given name

        :param name: tolerance name (eg. num, eig, sym). If None, return the
            default tolerance.
        """
        return self.tolerances.get(name, self.tolerances['DEFAULT'])

    def set(self, value, name='DEFAULT'):
        """
        :param value: new tolerance, must be a non negative number
        :param name: tolerance name, by default the fallback entry
        """
        if value < 0:
            raise ValueError('Tolerance %s must be non negative' % name)
        self.tolerances[name] = value

    def unset(self, name):
        """
        Ensure the given tolerance falls back to the default one.

        :param name: tolerance name
        """
        try:
            self.tolerances.pop(name)
        except KeyError:
            pass


# num: Hodge reconstruction/orthogonality, eig: eigen residuals (relative),
# sym: symmetry check (relative), chain: d d = 0 for float complexes,
# zero: kernel threshold relative to max(1, lambda_max),
# transfer: agreement of spectra computed from different matrices
TOLERANCES = Tolerances(
    default=1e-9,
    num=1e-9,
    eig=1e-10,
    sym=1e-12,
    chain=1e-9,
    zero=1e-9,
    transfer=1e-8,
)


def zero_tol_for(lambda_max=0.0, tolerances=None):
    """
    Threshold under which an eigenvalue is counted as zero.

    The ``HDX_ZERO_TOL`` environment variable, when set to a finite non
    negative number, is used as an absolute threshold and wins over the
    relative default. Any other value is logged and ignored.

    :param lambda_max: largest eigenvalue of the spectrum being thresholded
    :param tolerances: :class:`Tolerances` to use, the module table if None
    """
    override = os.environ.get(ZERO_TOL_ENV)
    if override:
        try:
            value = float(override)
        except ValueError:
            value = None
        if value is not None and math.isfinite(value) and value >= 0:
            return value
        logger.warning(
            'Ignoring malformed %s=%r, using the relative default',
            ZERO_TOL_ENV,
            override,
        )
    tolerances = tolerances or TOLERANCES
    return tolerances.get('zero') * max(1.0, float(lambda_max))
