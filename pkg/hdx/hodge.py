"""
Laplacians, Hodge decomposition, spectra, Betti numbers and gaps of a finite
cochain complex given by its coboundary matrices.

All adjoints are taken with respect to the inner product that makes the
simplex (or cell) basis orthonormal, so the adjoint of d is its transpose.
"""
import logging
from collections import namedtuple
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from . import linalg
from .config import TOLERANCES, zero_tol_for
from .errors import (
    DegreeOutOfRange,
    DimensionMismatch,
    NegativeSpectrum,
    NotACochainComplex,
    ZeroVector,
)
from .simplicial import coboundary_matrix

logger = logging.getLogger(__name__)

UpperGap = namedtuple('UpperGap', ['restricted_min', 'first_nonzero'])


class Cochain(object):
    """
    Real cochain of a fixed degree, coefficients indexed by the cell basis.
    """

    def __init__(self, degree, coeffs):
        self.degree = degree
        self.coeffs = np.asarray(coeffs, dtype=float)

    def __repr__(self):
        return '<Cochain degree:%d size:%d>' % (self.degree, len(self.coeffs))

    def __len__(self):
        return len(self.coeffs)


class CochainComplex(object):
    """
    Cochain complex C^0 -> ... -> C^top given by the matrices of d_l.

    Rational entries are kept exactly, ranks are then computed over the
    rationals and the chain identity is checked without tolerance.
    """

    def __init__(self, coboundaries, dims=None):
        """
        :param coboundaries: list of matrices, entry l being d_l of shape
            (dims[l+1], dims[l]); integer, Fraction or float entries
        :param dims: cochain dimensions for degrees 0..top, required when no
            coboundaries are given
        """
        coboundaries = [np.asarray(d) for d in coboundaries]
        if dims is None:
            if not coboundaries:
                raise DimensionMismatch(
                    coboundaries,
                    'dims are required for a complex without coboundaries',
                )
            dims = [d.shape[1] for d in coboundaries]
            dims.append(coboundaries[-1].shape[0])
        self.dims = tuple(int(dim) for dim in dims)
        if len(self.dims) != len(coboundaries) + 1:
            raise DimensionMismatch(
                dims,
                'Got %d dims for %d coboundaries' % (
                    len(self.dims), len(coboundaries),
                ),
            )
        for l, d in enumerate(coboundaries):
            if d.ndim != 2 or d.shape != (self.dims[l + 1], self.dims[l]):
                raise DimensionMismatch(
                    d,
                    'd_%d has shape %s, expected %s' % (
                        l, d.shape, (self.dims[l + 1], self.dims[l]),
                    ),
                )

        self._exact = [
            linalg.as_exact(d) if linalg.is_rational(d) else None
            for d in coboundaries
        ]
        self._float = [np.asarray(d, dtype=float) for d in coboundaries]
        self._ranks = {}
        self._check_chain_identity()

    def __repr__(self):
        return '<CochainComplex dims:%s>' % (list(self.dims),)

    @property
    def top(self):
        return len(self.dims) - 1

    @property
    def is_exact(self):
        return all(d is not None for d in self._exact)

    def _check_chain_identity(self):
        for l in range(self.top - 1):
            first, second = self._exact[l], self._exact[l + 1]
            if first is not None and second is not None:
                product = linalg.exact_matmul(second, first)
                ok = not any(product.flat)
            else:
                product = self._float[l + 1].dot(self._float[l])
                ok = (
                    product.size == 0 or
                    np.max(np.abs(product)) <= TOLERANCES.get('chain')
                )
            if not ok:
                raise NotACochainComplex(
                    l, 'd_%d d_%d != 0, not a cochain complex' % (l + 1, l)
                )

    def check_degree(self, l):
        if not 0 <= l <= self.top:
            raise DegreeOutOfRange(
                l, 'Degree %d out of range [0, %d]' % (l, self.top)
            )

    def coboundary(self, l):
        """
        Float matrix of d_l for -1 <= l <= top, the maps leaving the range
        being zero matrices.
        """
        if l == -1:
            return np.zeros((self.dims[0], 0))
        if l == self.top:
            return np.zeros((0, self.dims[l]))
        if not 0 <= l < self.top:
            raise DegreeOutOfRange(
                l, 'No coboundary d_%d in %r' % (l, self)
            )
        return self._float[l]

    def exact_coboundary(self, l):
        """
        Same as :meth:`coboundary` with :class:`fractions.Fraction` entries.
        """
        if l == -1:
            return linalg.exact_zeros(self.dims[0], 0)
        if l == self.top:
            return linalg.exact_zeros(0, self.dims[l])
        if not 0 <= l < self.top:
            raise DegreeOutOfRange(
                l, 'No coboundary d_%d in %r' % (l, self)
            )
        if self._exact[l] is None:
            raise DimensionMismatch(l, 'd_%d has non rational entries' % l)
        return self._exact[l]

    def rank(self, l):
        """
        Rank of d_l, exact when d_l is rational.
        """
        if l == -1 or l == self.top:
            return 0
        if l not in self._ranks:
            if self._exact[l] is not None:
                self._ranks[l] = linalg.rational_rank(self._exact[l])
            else:
                logger.debug('d_%d is not rational, using numerical rank', l)
                self._ranks[l] = linalg.numerical_rank(self._float[l])
        return self._ranks[l]


def cochain_complex(K, top=None):
    """
    Simplicial cochain complex of K up to degree ``top`` (the dimension of K
    by default).
    """
    top = K.dim if top is None else top
    coboundaries = [
        coboundary_matrix(K, l) if l < K.dim
        else np.zeros((K.count(l + 1), K.count(l)), dtype=np.int64)
        for l in range(top)
    ]
    return CochainComplex(
        coboundaries,
        dims=[K.count(l) for l in range(top + 1)],
    )


def direct_sum_complex(complexes):
    """
    Degree-wise direct sum of cochain complexes of the same length.
    """
    complexes = list(complexes)
    if not complexes:
        raise DimensionMismatch(complexes, 'Empty direct sum')
    top = complexes[0].top
    if any(member.top != top for member in complexes):
        raise DimensionMismatch(
            [member.top for member in complexes],
            'Direct sum of complexes of different length',
        )
    coboundaries = []
    for l in range(top):
        if all(member.is_exact for member in complexes):
            blocks = [member.exact_coboundary(l) for member in complexes]
            coboundaries.append(_exact_block_diagonal(blocks))
        else:
            coboundaries.append(block_diagonal(
                [member.coboundary(l) for member in complexes]
            ))
    dims = [sum(member.dims[l] for member in complexes)
            for l in range(top + 1)]
    return CochainComplex(coboundaries, dims=dims)


def _exact_block_diagonal(blocks):
    rows = sum(block.shape[0] for block in blocks)
    cols = sum(block.shape[1] for block in blocks)
    out = linalg.exact_zeros(rows, cols)
    row = col = 0
    for block in blocks:
        out[row:row + block.shape[0], col:col + block.shape[1]] = block
        row += block.shape[0]
        col += block.shape[1]
    return out


def block_diagonal(matrices):
    """
    Explicit direct sum operator of the given square or rectangular blocks.
    """
    matrices = [np.asarray(m, dtype=float) for m in matrices]
    if not matrices:
        return np.zeros((0, 0))
    rows = sum(m.shape[0] for m in matrices)
    cols = sum(m.shape[1] for m in matrices)
    if all(m.size for m in matrices):
        return scipy.linalg.block_diag(*matrices)
    out = np.zeros((rows, cols))
    row = col = 0
    for m in matrices:
        out[row:row + m.shape[0], col:col + m.shape[1]] = m
        row += m.shape[0]
        col += m.shape[1]
    return out


def upper_laplacian(M, l):
    """
    Upper Laplacian of degree l, the adjoint of d_l composed with d_l.
    """
    M.check_degree(l)
    d = M.coboundary(l)
    return d.T.dot(d)


def lower_laplacian(M, l):
    """
    Lower Laplacian of degree l, d_{l-1} composed with its adjoint.
    """
    M.check_degree(l)
    d = M.coboundary(l - 1)
    return d.dot(d.T)


def full_laplacian(M, l):
    return upper_laplacian(M, l) + lower_laplacian(M, l)


def hodge_decompose(M, l, c):
    """
    Splits a degree l cochain into its harmonic, exact and coexact parts.

    :param M: :class:`CochainComplex`
    :param l: degree
    :param c: :class:`Cochain` or coefficient vector of size dims[l]
    :return: tuple (harmonic, exact, coexact) of coefficient vectors
    """
    M.check_degree(l)
    if isinstance(c, Cochain):
        if c.degree != l:
            raise DimensionMismatch(
                c, 'Cochain of degree %d given for degree %d' % (c.degree, l)
            )
        c = c.coeffs
    c = np.asarray(c, dtype=float)
    if c.shape != (M.dims[l],):
        raise DimensionMismatch(
            c, 'Cochain of shape %s, expected (%d,)' % (c.shape, M.dims[l])
        )

    exact_basis, _ = linalg.orthonormal_bases(
        M.coboundary(l - 1), M.rank(l - 1)
    )
    coexact_basis, _ = linalg.orthonormal_bases(
        M.coboundary(l).T, M.rank(l)
    )
    exact = exact_basis.dot(exact_basis.T.dot(c))
    coexact = coexact_basis.dot(coexact_basis.T.dot(c))
    harmonic = c - exact - coexact
    return harmonic, exact, coexact


def betti_exact(M, l):
    """
    dim ker d_l - rank d_{l-1}, over the rationals when the complex is
    rational.
    """
    M.check_degree(l)
    return M.dims[l] - M.rank(l) - M.rank(l - 1)


def betti_numbers(M):
    return [betti_exact(M, l) for l in range(M.top + 1)]


def spectrum(S, sym_tol=None):
    """
    All the eigenvalues of a real symmetric matrix, ascending, with
    multiplicity.
    """
    values, _ = linalg.symmetric_eigh(S, sym_tol=sym_tol)
    return values


def essential_gap(spec, zero_tol):
    """
    Smallest eigenvalue above ``zero_tol``, None if there is none.

    :raises NegativeSpectrum: if an eigenvalue is below -zero_tol
    """
    spec = np.asarray(spec, dtype=float)
    if spec.size and spec.min() < -zero_tol:
        raise NegativeSpectrum(
            spec, 'Eigenvalue %g below -%g' % (spec.min(), zero_tol)
        )
    nonzero = spec[spec > zero_tol]
    if not nonzero.size:
        return None
    return float(nonzero.min())


def sigma_union(spectra):
    """
    Multiset union of sorted spectra, the spectrum of the direct sum of the
    operators.
    """
    spectra = [np.asarray(spec, dtype=float) for spec in spectra]
    if not spectra:
        return np.zeros(0)
    return np.sort(np.concatenate(spectra), kind='mergesort')


def spectral_gap_upper(M, l, zero_tol=None):
    """
    Both gap notions of the degree l upper Laplacian.

    ``restricted_min`` is the minimum eigenvalue of the upper Laplacian
    restricted to the orthogonal complement of the image of d_{l-1};
    ``first_nonzero`` its smallest eigenvalue above ``zero_tol``. They
    agree exactly when the degree l cohomology vanishes.
    """
    laplacian = upper_laplacian(M, l)
    values = spectrum(laplacian)
    if zero_tol is None:
        zero_tol = zero_tol_for(values[-1] if values.size else 0.0)
    _, complement = linalg.orthonormal_bases(
        M.coboundary(l - 1), M.rank(l - 1)
    )
    return UpperGap(
        restricted_min=linalg.compressed_min(laplacian, complement),
        first_nonzero=essential_gap(values, zero_tol),
    )


def reduced_laplacian_min(M, l):
    """
    Minimum eigenvalue of the upper Laplacian on the image of the adjoint of
    d_l, None when that image is trivial.
    """
    laplacian = upper_laplacian(M, l)
    image, _ = linalg.orthonormal_bases(M.coboundary(l).T, M.rank(l))
    return linalg.compressed_min(laplacian, image)


def rayleigh_quotient(S, v):
    """
    <Sv, v> / <v, v>
    """
    v = np.asarray(v, dtype=float)
    norm2 = float(v.dot(v))
    if norm2 == 0.0:
        raise ZeroVector(v, 'Rayleigh quotient of the zero vector')
    return float(v.dot(np.asarray(S, dtype=float).dot(v))) / norm2


@dataclass(frozen=True)
class SpectrumReport(object):
    degree: int
    eigenvalues: tuple
    zero_tol: float
    betti_exact: int
    gap_restricted: object = None
    first_nonzero_upper: object = None
    first_nonzero_lower: object = None
    essential_gap: object = None
    diagnostics: tuple = field(default_factory=tuple)


def spectrum_report(M, l, zero_tol=None):
    """
    Collects the degree l spectral data of a cochain complex.

    The number of full Laplacian eigenvalues below ``zero_tol`` is checked
    against the exact Betti number, a disagreement is logged and kept in the
    report diagnostics while the exact value is reported.
    """
    values = spectrum(full_laplacian(M, l))
    if zero_tol is None:
        zero_tol = zero_tol_for(values[-1] if values.size else 0.0)
    betti = betti_exact(M, l)
    diagnostics = []
    kernel = int(np.sum(values <= zero_tol))
    if kernel != betti:
        msg = (
            'degree %d: %d eigenvalues below %g but exact betti number is %d'
            % (l, kernel, zero_tol, betti)
        )
        logger.error(msg)
        diagnostics.append(msg)

    gap = spectral_gap_upper(M, l, zero_tol=zero_tol)
    lower = spectrum(lower_laplacian(M, l))
    return SpectrumReport(
        degree=l,
        eigenvalues=tuple(float(x) for x in values),
        zero_tol=float(zero_tol),
        betti_exact=betti,
        gap_restricted=gap.restricted_min,
        first_nonzero_upper=gap.first_nonzero,
        first_nonzero_lower=essential_gap(lower, zero_tol),
        essential_gap=essential_gap(values, zero_tol),
        diagnostics=tuple(diagnostics),
    )
