"""
Finite abstract simplicial complexes and their integer (co)boundary matrices.

Simplices are stored as strictly increasing tuples of vertex ids, so the
alternating sign convention fixes every orientation.
"""
import itertools
import logging

import numpy as np

from .errors import DegreeOutOfRange, InvalidFacet

logger = logging.getLogger(__name__)


class SimplicialComplex(object):
    """
    Finite abstract simplicial complex with an ordered simplex basis per
    degree.

    The constructor stores whatever it is given, use :func:`build_complex`
    to get a normalized, downward closed complex and
    :func:`validate_complex` to check a hand built one.
    """

    def __init__(self, simplices, vertex_count=None):
        """
        :param simplices: sequence indexed by degree, each an ordered
            sequence of vertex tuples
        :param vertex_count: number of vertices, by default the number of
            listed 0-simplices
        """
        self.simplices = tuple(
            tuple(tuple(simplex) for simplex in degree)
            for degree in simplices
        )
        if vertex_count is None:
            vertex_count = len(self.simplices[0]) if self.simplices else 0
        self.vertex_count = vertex_count
        self.index = tuple(
            dict((simplex, pos) for pos, simplex in enumerate(degree))
            for degree in self.simplices
        )

    def __repr__(self):
        return '<SimplicialComplex dim:%d counts:%s>' % (
            self.dim,
            [len(degree) for degree in self.simplices],
        )

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count and
            self.simplices == other.simplices
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.vertex_count, self.simplices))

    @property
    def dim(self):
        return len(self.simplices) - 1

    def count(self, l):
        """
        Number of l-simplices, 0 for degrees above the dimension.
        """
        if l < 0:
            raise DegreeOutOfRange(l, 'Negative degree %d' % l)
        if l > self.dim:
            return 0
        return len(self.simplices[l])

    def check_degree(self, l, low=0, high=None):
        high = self.dim if high is None else high
        if not low <= l <= high:
            raise DegreeOutOfRange(
                l,
                'Degree %d out of range [%d, %d] for %r' % (
                    l, low, high, self,
                ),
            )


def build_complex(facets, vertex_count=None):
    """
    Downward closure of the given facets.

    Vertex ids that do not show up in any facet but are smaller than the
    largest one (or than ``vertex_count``) become isolated vertices, so the
    0-simplices always enumerate ``0..vertex_count-1``.

    :param facets: iterable of vertex id tuples, in any order
    :param vertex_count: minimum number of vertices of the result
    """
    by_degree = {}
    max_vertex = -1
    for facet in facets:
        facet = tuple(facet)
        if not facet:
            raise InvalidFacet(facet, 'Empty facet')
        for vertex in facet:
            if not isinstance(vertex, (int, np.integer)) or vertex < 0:
                raise InvalidFacet(
                    facet,
                    'Vertex ids must be non negative integers, got %r' % (
                        vertex,
                    ),
                )
        if len(set(facet)) != len(facet):
            raise InvalidFacet(facet, 'Repeated vertex in facet %s' % (
                facet,
            ))
        facet = tuple(sorted(int(vertex) for vertex in facet))
        max_vertex = max(max_vertex, facet[-1])
        for size in range(1, len(facet) + 1):
            by_degree.setdefault(size - 1, set()).update(
                itertools.combinations(facet, size)
            )

    vertex_count = max(max_vertex + 1, vertex_count or 0)
    if vertex_count:
        by_degree.setdefault(0, set()).update(
            (vertex,) for vertex in range(vertex_count)
        )
    dim = max(by_degree) if by_degree else -1
    simplices = [sorted(by_degree[l]) for l in range(dim + 1)]
    complex_ = SimplicialComplex(simplices, vertex_count=vertex_count)
    logger.debug('Built %r', complex_)
    return complex_


def boundary_matrix(K, l):
    """
    Matrix of the boundary map C_l -> C_{l-1} in the simplex bases.

    The column of (v_0 < ... < v_l) has (-1)^i in the row of the face that
    omits v_i.
    """
    K.check_degree(l, low=1)
    faces = K.index[l - 1]
    matrix = np.zeros((K.count(l - 1), K.count(l)), dtype=np.int64)
    for col, simplex in enumerate(K.simplices[l]):
        for i in range(l + 1):
            face = simplex[:i] + simplex[i + 1:]
            matrix[faces[face], col] = (-1) ** i
    return matrix


def coboundary_matrix(K, l):
    """
    Matrix of the coboundary d_l: C^l -> C^{l+1}, the transpose of
    :func:`boundary_matrix` at degree l+1 in the dual bases.
    """
    K.check_degree(l, low=0, high=K.dim - 1)
    return boundary_matrix(K, l + 1).T.copy()


def vertex_degrees(K, l):
    """
    Number of l-simplices containing each vertex, indexed by vertex id.
    """
    K.check_degree(l)
    counts = [0] * K.vertex_count
    for simplex in K.simplices[l]:
        for vertex in simplex:
            counts[vertex] += 1
    return counts


def vertex_degree_profile(K, l):
    """
    The multiset of :func:`vertex_degrees`, as a sorted list.
    """
    return sorted(vertex_degrees(K, l))


def euler_characteristic(K):
    return sum((-1) ** l * K.count(l) for l in range(K.dim + 1))


def maximal_simplices(K):
    """
    Simplices not contained in any simplex one degree higher, ordered by
    degree and then lexicographically.
    """
    covered = set()
    for l in range(1, K.dim + 1):
        for simplex in K.simplices[l]:
            covered.update(itertools.combinations(simplex, l))
    return [
        simplex
        for degree in K.simplices
        for simplex in degree
        if simplex not in covered
    ]


def validate_complex(K):
    """
    Checks the invariants of a simplicial complex.

    :return: list of diagnostic strings, empty when the complex is valid
    """
    diagnostics = []
    for l, degree in enumerate(K.simplices):
        seen = set()
        for simplex in degree:
            if len(simplex) != l + 1:
                diagnostics.append(
                    'degree %d: %s has %d vertices' % (
                        l, simplex, len(simplex),
                    )
                )
            if any(a >= b for a, b in zip(simplex, simplex[1:])):
                diagnostics.append(
                    'degree %d: %s is not strictly increasing' % (l, simplex)
                )
            if simplex in seen:
                diagnostics.append(
                    'degree %d: duplicate simplex %s' % (l, simplex)
                )
            seen.add(simplex)

    expected_vertices = tuple((v,) for v in range(K.vertex_count))
    actual_vertices = K.simplices[0] if K.simplices else ()
    if actual_vertices != expected_vertices:
        diagnostics.append(
            'vertices do not enumerate 0..%d' % (K.vertex_count - 1)
        )

    closed = True
    for l in range(1, K.dim + 1):
        for simplex in K.simplices[l]:
            for face in itertools.combinations(simplex, l):
                if face not in K.index[l - 1]:
                    closed = False
                    diagnostics.append(
                        'closure: face %s of %s is missing' % (face, simplex)
                    )
    if diagnostics or not closed:
        return diagnostics

    for l in range(1, K.dim):
        product = boundary_matrix(K, l).dot(boundary_matrix(K, l + 1))
        if np.any(product):
            diagnostics.append('boundary: d_%d d_%d != 0' % (l, l + 1))
    return diagnostics
