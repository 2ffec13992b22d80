"""
Dense linear algebra helpers: exact rational rank, the symmetric eigensolver
and orthonormal bases of column spaces.
"""
import logging
from fractions import Fraction

import numpy as np
import scipy.linalg
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .config import TOLERANCES
from .errors import NotSymmetric

logger = logging.getLogger(__name__)


def _to_qq(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, (float, np.floating)):
        if value != int(value):
            raise ValueError('%r is not an exact rational entry' % value)
    return QQ(int(value))


def is_rational(matrix):
    """
    Whether all the entries of the given matrix can be treated exactly, that
    is, integers, :class:`fractions.Fraction` or integral floats.
    """
    arr = np.asarray(matrix)
    if arr.dtype.kind in 'iub':
        return True
    if arr.dtype.kind == 'f':
        return bool(np.all(arr == np.round(arr)))
    if arr.dtype == object:
        return all(
            isinstance(x, (int, np.integer, Fraction)) for x in arr.flat
        )
    return False


def as_exact(matrix):
    """
    Returns an object array of :class:`fractions.Fraction` with the same
    entries as the given rational matrix.
    """
    arr = np.asarray(matrix)
    out = np.empty(arr.shape, dtype=object)
    for pos, value in np.ndenumerate(arr):
        if isinstance(value, Fraction):
            out[pos] = value
        else:
            out[pos] = Fraction(int(value))
    return out


def exact_zeros(rows, cols):
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def exact_matmul(left, right):
    """
    Product of two exact object matrices, empty inner dimensions included.
    """
    if left.shape[1] != right.shape[0]:
        raise ValueError(
            'Cannot multiply %s by %s' % (left.shape, right.shape)
        )
    if left.shape[1] == 0 or left.shape[0] == 0 or right.shape[1] == 0:
        return exact_zeros(left.shape[0], right.shape[1])
    return np.dot(left, right)


def rational_rank(matrix):
    """
    Rank over the rationals, computed by exact elimination.

    :param matrix: 2d array with integer or :class:`fractions.Fraction`
        entries
    """
    arr = np.asarray(matrix, dtype=object)
    if arr.ndim != 2:
        raise ValueError('Expected a 2d matrix, got shape %s' % (arr.shape,))
    rows, cols = arr.shape
    if rows == 0 or cols == 0:
        return 0
    entries = [[_to_qq(value) for value in row] for row in arr]
    rank = DomainMatrix(entries, (rows, cols), QQ).rank()
    logger.debug('Exact rank of %dx%d matrix: %d', rows, cols, rank)
    return rank


def numerical_rank(matrix):
    arr = np.asarray(matrix, dtype=float)
    if arr.size == 0:
        return 0
    return int(np.linalg.matrix_rank(arr))


def check_symmetric(matrix, sym_tol=None):
    """
    Raises :class:`NotSymmetric` unless the matrix is symmetric up to the
    relative tolerance ``sym_tol``.
    """
    arr = np.asarray(matrix, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSymmetric(arr, 'Matrix of shape %s is not square' % (
            arr.shape,
        ))
    if arr.size == 0:
        return arr
    if sym_tol is None:
        sym_tol = TOLERANCES.get('sym')
    scale = max(1.0, float(np.max(np.abs(arr))))
    asym = float(np.max(np.abs(arr - arr.T)))
    if asym > sym_tol * scale:
        raise NotSymmetric(
            arr,
            'Matrix is not symmetric, max |S - S^T| = %g' % asym,
        )
    return arr


def symmetric_eigh(matrix, sym_tol=None):
    """
    Eigenvalues (ascending) and orthonormal eigenvectors of a real symmetric
    matrix.
    """
    arr = check_symmetric(matrix, sym_tol=sym_tol)
    if arr.size == 0:
        return np.zeros(0), np.zeros((0, 0))
    values, vectors = scipy.linalg.eigh(arr, check_finite=True)
    return values, vectors


def orthonormal_bases(matrix, rank):
    """
    Splits the target space of ``matrix`` into an orthonormal basis of its
    column space and one of the orthogonal complement.

    :param matrix: real matrix of shape (n, k)
    :param rank: the rank of the matrix, decided by the caller (usually
        exactly)
    :return: tuple (image_basis, complement_basis) of shapes (n, rank) and
        (n, n - rank)
    """
    arr = np.asarray(matrix, dtype=float)
    rows = arr.shape[0]
    if arr.shape[1] == 0 or rank == 0:
        return np.zeros((rows, 0)), np.eye(rows)
    left, _, _ = scipy.linalg.svd(arr, full_matrices=True)
    return left[:, :rank], left[:, rank:]


def compressed_min(operator, basis, sym_tol=None):
    """
    Minimum eigenvalue of ``operator`` restricted to the span of the
    orthonormal columns of ``basis``, None if the span is trivial.
    """
    if basis.shape[1] == 0:
        return None
    compressed = basis.T.dot(operator).dot(basis)
    compressed = (compressed + compressed.T) / 2.0
    values, _ = symmetric_eigh(compressed, sym_tol=sym_tol)
    return float(values[0])
