"""
Hodge Laplacian spectra of finite simplicial complexes, their finite covers
and the matching twisted group cohomology complexes.
"""
import logging

__version__ = '0.1.0'
__all__ = [
    'simplicial',
    'hodge',
    'group_ring',
    'covers',
    'family',
    'fixtures',
    'serialization',
    'cli',
]

logger = logging.getLogger(__name__)


def set_loglevel(level):
    """
    Sets the loglevel for the hdx package.

    :param level: a loglevel constant from the logging module.
    """
    logger.setLevel(level)
