"""
Equivariant complex data, coset actions of finite index subgroups, quotient
complexes and twisted cochain complexes.

A :class:`GammaComplexData` lists orbit representatives of the cells of a
complex with a free simplicial group action. Every cell is a tuple of
decorated vertices ``(word, base)``, the point ``word . base`` of the cover.
The group ring boundary matrices are derived from these decorations, so the
geometry of the quotients and the algebra of the twisted complexes share a
single source.

A :class:`CosetAction` is the right action of the generators on the cosets
of a subgroup, given by one permutation per generator. Cosets are acted on
from the right, ``j.(uv) = (j.u).v``.
"""
import itertools
import logging
import operator
from collections import Counter, namedtuple
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy.combinatorics as comb

from . import linalg
from .errors import (
    DegreeOutOfRange,
    InvalidGammaData,
    InvalidPermutation,
    NotSimplicial,
    UnknownGenerator,
)
from .group_ring import (
    GroupRingElement,
    GroupRingMatrix,
    Word,
    as_word,
    evaluate_matrix,
    laplacian_symbol,
)
from .hodge import CochainComplex, cochain_complex
from .simplicial import build_complex, vertex_degrees

logger = logging.getLogger(__name__)

DecoratedVertex = namedtuple('DecoratedVertex', ['word', 'base'])
# one face of a cell: position of the omitted vertex, index of the matching
# cell one degree lower, translate taking that cell onto the face, sign of
# the reordering between both vertex orders, the target vertex paired with
# each face vertex and whether the translate holds as reduced words
Face = namedtuple(
    'Face',
    ['omitted', 'target', 'translate', 'sign', 'pairing', 'formal'],
)


def permutation_sign(order):
    """
    Sign of the permutation sorting the given sequence of distinct values.
    """
    inversions = sum(
        1
        for a in range(len(order))
        for b in range(a + 1, len(order))
        if order[a] > order[b]
    )
    return -1 if inversions % 2 else 1


def _exponent_sums(word):
    sums = Counter()
    for letter in word:
        sums[abs(letter)] += 1 if letter > 0 else -1
    return frozenset(item for item in sums.items() if item[1])


class CosetAction(object):
    """
    Permutation action of the generators on the cosets ``0..index-1``.
    """

    def __init__(self, perms, index=None, identity_coset=0, label=None):
        """
        :param perms: one permutation in one line notation per generator,
            generator ``g`` acting through ``perms[g-1]``
        :param index: number of cosets, by default the length of the perms
        :param identity_coset: coset of the subgroup itself
        :param label: name used in reports
        """
        try:
            perms = [
                tuple(operator.index(image) for image in perm)
                for perm in perms
            ]
            identity_coset = operator.index(identity_coset)
            if index is not None:
                index = operator.index(index)
        except TypeError as error:
            raise InvalidPermutation(
                perms, 'Cosets must be integers: %s' % error,
            )
        if index is None:
            if not perms:
                raise InvalidPermutation(
                    perms, 'The index is needed for an action without '
                    'generators'
                )
            index = len(perms[0])
        if index < 1:
            raise InvalidPermutation(index, 'Index must be positive')
        for gen, perm in enumerate(perms, start=1):
            if len(perm) != index:
                raise InvalidPermutation(
                    perm,
                    'Permutation of generator %d has %d entries, expected '
                    '%d' % (gen, len(perm), index),
                )
            if sorted(perm) != list(range(index)):
                raise InvalidPermutation(
                    perm,
                    'Generator %d does not act bijectively on 0..%d' % (
                        gen, index - 1,
                    ),
                )
        if not 0 <= identity_coset < index:
            raise InvalidPermutation(
                identity_coset,
                'Identity coset %d out of range' % identity_coset,
            )
        self.perms = tuple(perms)
        self.index = index
        self.identity_coset = identity_coset
        self.label = label if label is not None else 'N=%d' % index
        self._forward = [np.array(perm, dtype=np.int64) for perm in perms]
        self._backward = [np.argsort(perm) for perm in self._forward]
        self._words = {}

    def __repr__(self):
        return '<CosetAction %s index:%d generators:%d>' % (
            self.label, self.index, self.generator_count,
        )

    def __eq__(self, other):
        if not isinstance(other, CosetAction):
            return NotImplemented
        return (
            self.perms == other.perms and
            self.index == other.index and
            self.identity_coset == other.identity_coset
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.perms, self.index, self.identity_coset))

    @property
    def generator_count(self):
        return len(self.perms)

    @classmethod
    def trivial(cls, generator_count, label=None):
        """
        Action on the single coset of the whole group.
        """
        return cls(
            [(0,)] * generator_count,
            index=1,
            label=label or 'trivial',
        )

    @classmethod
    def cyclic(cls, order, generator_count=1, label=None):
        """
        Every generator shifts the cosets ``0..order-1`` by one.
        """
        if order < 1:
            raise InvalidPermutation(order, 'Order must be positive')
        shift = [(j + 1) % order for j in range(order)]
        return cls(
            [shift] * generator_count,
            index=order,
            label=label or 'cyclic-%d' % order,
        )

    def direct_sum(self, other, label=None):
        """
        Action on the disjoint union of both coset spaces.
        """
        if other.generator_count != self.generator_count:
            raise InvalidPermutation(
                other,
                'Cannot add actions of %d and %d generators' % (
                    self.generator_count, other.generator_count,
                ),
            )
        perms = [
            mine + tuple(self.index + image for image in theirs)
            for mine, theirs in zip(self.perms, other.perms)
        ]
        return CosetAction(
            perms,
            index=self.index + other.index,
            identity_coset=self.identity_coset,
            label=label or '%s+%s' % (self.label, other.label),
        )

    def check_generator(self, letter):
        if not 1 <= abs(letter) <= self.generator_count:
            raise UnknownGenerator(
                letter,
                'Generator %d unknown to %r' % (abs(letter), self),
            )

    def word_permutation(self, word):
        """
        Images of all the cosets under a word, ``images[j] = j.word``.
        """
        word = as_word(word)
        if word in self._words:
            return self._words[word]
        images = np.arange(self.index)
        for letter in word:
            self.check_generator(letter)
            if letter > 0:
                images = self._forward[letter - 1][images]
            else:
                images = self._backward[-letter - 1][images]
        self._words[word] = images
        return images

    def apply(self, coset, word):
        return int(self.word_permutation(word)[coset])

    def orbits(self):
        """
        Orbits of the action as sorted lists, ordered by smallest coset.
        """
        if not self.perms or self.index == 1:
            return [[j] for j in range(self.index)]
        group = comb.PermutationGroup(
            [comb.Permutation(list(perm)) for perm in self.perms]
        )
        return sorted(sorted(orbit) for orbit in group.orbits())

    def is_transitive(self):
        return len(self.orbits()) == 1


def coset_action_from_perms(perms, N, identity_coset=0, label=None):
    """
    Validated :class:`CosetAction` of index N.

    :raises InvalidPermutation: if some perm is not a bijection of 0..N-1
    """
    action = CosetAction(
        perms, index=N, identity_coset=identity_coset, label=label,
    )
    if not action.is_transitive():
        logger.warning(
            '%r is not transitive, it acts on %d orbits',
            action,
            len(action.orbits()),
        )
    return action


class GammaComplexData(object):
    """
    Orbit representatives of the cells of a free equivariant simplicial
    complex, truncated at degree n.

    ``cells[l]`` lists the degree l cells, each one a tuple of l+1
    :class:`DecoratedVertex`. Degree 0 cells are ``(e, i)`` for the i-th
    base vertex. Several vertices of a cell may lie over one base vertex
    and several cells may share their base vertices, as long as every face
    of a cell is a translate of a listed cell one degree lower with the
    same multiset of base vertices.
    """

    def __init__(self, generator_count, cells):
        """
        :param generator_count: number of generators of the group
        :param cells: sequence indexed by degree of sequences of cells, a
            cell being a sequence of ``(word, base)`` pairs
        """
        try:
            generator_count = operator.index(generator_count)
            cells = [
                [
                    [(word, operator.index(base)) for word, base in cell]
                    for cell in degree
                ]
                for degree in cells
            ]
        except TypeError as error:
            raise InvalidGammaData(
                cells, 'Malformed generator count or cells: %s' % error,
            )
        if generator_count < 0:
            raise InvalidGammaData(
                generator_count, 'Negative number of generators'
            )
        self.generator_count = generator_count
        self.cells = tuple(
            tuple(
                tuple(
                    DecoratedVertex(as_word(word), base)
                    for word, base in cell
                )
                for cell in degree
            )
            for degree in cells
        )
        self._check_cells()
        self._by_bases = []
        for degree in self.cells:
            by_bases = {}
            for pos, cell in enumerate(degree):
                key = tuple(sorted(vertex.base for vertex in cell))
                by_bases.setdefault(key, []).append(pos)
            self._by_bases.append(by_bases)
        self.faces = self._derive_faces()
        self.boundary_gr = self._derive_boundaries()
        self._dual = {}
        logger.debug(
            'Built equivariant datum with %d generators and cell counts %s',
            generator_count,
            [len(degree) for degree in self.cells],
        )

    def __repr__(self):
        return '<GammaComplexData generators:%d cells:%s>' % (
            self.generator_count,
            [len(degree) for degree in self.cells],
        )

    def __eq__(self, other):
        if not isinstance(other, GammaComplexData):
            return NotImplemented
        return (
            self.generator_count == other.generator_count and
            self.cells == other.cells
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.generator_count, self.cells))

    @property
    def n(self):
        return len(self.cells) - 1

    @property
    def vertex_count(self):
        return len(self.cells[0])

    def cell_count(self, l):
        if l < 0 or l > self.n:
            return 0
        return len(self.cells[l])

    def check_degree(self, l, low=0, high=None):
        high = self.n if high is None else high
        if not low <= l <= high:
            raise DegreeOutOfRange(
                l, 'Degree %d out of range [%d, %d] for %r' % (
                    l, low, high, self,
                ),
            )

    def _check_cells(self):
        if not self.cells:
            raise InvalidGammaData(self.cells, 'No degree 0 cells given')
        for pos, cell in enumerate(self.cells[0]):
            if cell != (DecoratedVertex(Word(), pos),):
                raise InvalidGammaData(
                    cell,
                    'Degree 0 cell %d must be the undecorated base vertex '
                    '%d' % (pos, pos),
                )
        vertex_count = len(self.cells[0])
        for l, degree in enumerate(self.cells):
            for cell in degree:
                if len(cell) != l + 1:
                    raise InvalidGammaData(
                        cell, 'Degree %d cell with %d vertices' % (
                            l, len(cell),
                        ),
                    )
                if len(set(cell)) != len(cell):
                    raise InvalidGammaData(
                        cell, 'Cell %s repeats a vertex' % (cell,),
                    )
                for vertex in cell:
                    if not 0 <= vertex.base < vertex_count:
                        raise InvalidGammaData(
                            cell, 'Unknown base vertex %d' % vertex.base
                        )
                    if any(
                        abs(letter) > self.generator_count
                        for letter in vertex.word
                    ):
                        raise InvalidGammaData(
                            cell,
                            'Word %r uses an unknown generator' % (
                                vertex.word,
                            ),
                        )

    def _derive_faces(self):
        faces = [()]
        for l in range(1, self.n + 1):
            degree_faces = []
            for cell in self.cells[l]:
                cell_faces = []
                for omitted in range(l + 1):
                    face = cell[:omitted] + cell[omitted + 1:]
                    match = self._match_face(l - 1, face)
                    if match is None:
                        raise InvalidGammaData(
                            cell,
                            'Face %s of %s matches no degree %d cell' % (
                                face, cell, l - 1,
                            ),
                        )
                    target, pairing, translate, formal = match
                    if not formal:
                        logger.debug(
                            'Face %s of %s is only matched up to relations '
                            'with degree %d cell %d',
                            face, cell, l - 1, target,
                        )
                    cell_faces.append(Face(
                        omitted, target, translate,
                        permutation_sign(pairing), pairing, formal,
                    ))
                degree_faces.append(tuple(cell_faces))
            faces.append(tuple(degree_faces))
        return tuple(faces)

    def _match_face(self, l, face):
        """
        Degree l cell the face is a translate of.

        Candidates have the same multiset of base vertices as the face. A
        candidate matches formally when, for some pairing of its vertices
        with the face vertices along equal bases, every quotient
        ``face_word * cell_word^-1`` is the same reduced word. Without a
        formal match the first pairing whose quotients agree in their
        exponent sums is taken, or failing that the first pairing at all.
        Its translate is read off the first face vertex and checked on the
        other vertices per action by :func:`validate_gamma_data`.

        :return: tuple (target, pairing, translate, formal), or None when no
            cell has the base vertices of the face
        """
        key = tuple(sorted(vertex.base for vertex in face))
        abelian = first = None
        for target in self._by_bases[l].get(key, ()):
            target_cell = self.cells[l][target]
            for pairing in itertools.permutations(range(len(face))):
                if any(
                    target_cell[k].base != vertex.base
                    for vertex, k in zip(face, pairing)
                ):
                    continue
                translates = [
                    vertex.word * target_cell[k].word.inverse()
                    for vertex, k in zip(face, pairing)
                ]
                if len(set(translates)) == 1:
                    return target, pairing, translates[0], True
                match = (target, pairing, translates[0], False)
                first = first or match
                if abelian is None and len(set(
                    _exponent_sums(translate) for translate in translates
                )) == 1:
                    abelian = match
        return abelian or first

    def _derive_boundaries(self):
        """
        Group ring matrices of the boundaries, ``boundary_gr[l]`` having a
        row per degree l-1 cell and a column per degree l cell.
        """
        boundaries = {}
        for l in range(1, self.n + 1):
            entries = [
                [GroupRingElement() for _ in self.cells[l]]
                for _ in self.cells[l - 1]
            ]
            for col, cell_faces in enumerate(self.faces[l]):
                for face in cell_faces:
                    coeff = (-1) ** face.omitted * face.sign
                    entries[face.target][col] = (
                        entries[face.target][col] +
                        GroupRingElement.from_word(
                            face.translate.inverse(), coeff
                        )
                    )
            boundaries[l] = GroupRingMatrix(
                entries,
                rows=len(self.cells[l - 1]),
                cols=len(self.cells[l]),
            )
        return boundaries

    def dual_boundary(self, l):
        """
        Matrix A_l of the dual of the degree l boundary, a row per degree l
        cell and a column per degree l-1 cell. Under a coset action it
        evaluates to the twisted coboundary d_{l-1}.
        """
        self.check_degree(l, low=1)
        if l not in self._dual:
            self._dual[l] = self.boundary_gr[l].involute_transpose()
        return self._dual[l]

    def laplacian_symbol(self, l):
        """
        Group ring Laplacian symbol D_l of the complex truncated at n.
        """
        self.check_degree(l)
        return laplacian_symbol(
            self.dual_boundary(l) if l >= 1 else None,
            self.dual_boundary(l + 1) if l < self.n else None,
            size=self.cell_count(l),
        )

    def truncate(self, n):
        self.check_degree(n)
        return GammaComplexData(self.generator_count, self.cells[:n + 1])


def _check_generators(G, act):
    if act.generator_count != G.generator_count:
        raise UnknownGenerator(
            act,
            '%r has %d generators, the datum needs %d' % (
                act, act.generator_count, G.generator_count,
            ),
        )


def _lifted_vertices(G, act, l, cell, coset):
    return [
        vertex.base * act.index + act.apply(coset, vertex.word)
        for vertex in G.cells[l][cell]
    ]


def validate_gamma_data(G, actions):
    """
    Checks an equivariant datum against a list of coset actions.

    :return: list of diagnostic strings, empty when the datum is valid for
        every given action
    """
    diagnostics = []
    for act in actions:
        found = []
        if act.generator_count != G.generator_count:
            diagnostics.append(
                '%s: %d generators, the datum has %d' % (
                    act.label, act.generator_count, G.generator_count,
                )
            )
            continue

        for l in range(1, G.n + 1):
            for pos, cell in enumerate(G.cells[l]):
                for coset in range(act.index):
                    lifted = _lifted_vertices(G, act, l, pos, coset)
                    if len(set(lifted)) != len(lifted):
                        found.append(
                            '%s: vertices of degree %d cell %d collide on '
                            'coset %d' % (act.label, l, pos, coset)
                        )
                for face in G.faces[l][pos]:
                    if face.formal:
                        continue
                    target = G.cells[l - 1][face.target]
                    vertices = cell[:face.omitted] + cell[face.omitted + 1:]
                    for vertex, k in zip(vertices, face.pairing):
                        moved = face.translate * target[k].word
                        if not np.array_equal(
                            act.word_permutation(moved),
                            act.word_permutation(vertex.word),
                        ):
                            found.append(
                                '%s: face %d of degree %d cell %d is not a '
                                'translate of degree %d cell %d' % (
                                    act.label, face.omitted, l, pos, l - 1,
                                    face.target,
                                )
                            )
                            break

        for l in range(G.n - 1):
            first = twisted_coboundary(G, act, l, exact=True)
            second = twisted_coboundary(G, act, l + 1, exact=True)
            if any(linalg.exact_matmul(second, first).flat):
                found.append(
                    '%s: d_%d d_%d != 0' % (act.label, l + 1, l)
                )

        if not found:
            try:
                quotient_complex(G, act)
            except NotSimplicial as error:
                found.append('%s: %s' % (act.label, error))
        diagnostics.extend(found)
    return diagnostics


def quotient_complex(G, act, n=None):
    """
    Quotient of the cover by the subgroup of the action, truncated at n.

    The vertex on base vertex v and coset j gets the id ``v * index + j``
    and the degree l cell i over coset j becomes the simplex with vertices
    ``(v_k, j.w_k)``.

    :raises NotSimplicial: if the quotient is not an abstract simplicial
        complex with ``|Y^l| * index`` simplices in each degree
    """
    n = G.n if n is None else n
    G.check_degree(n)
    _check_generators(G, act)
    facets = []
    for l in range(n + 1):
        for pos in range(G.cell_count(l)):
            for coset in range(act.index):
                lifted = _lifted_vertices(G, act, l, pos, coset)
                if len(set(lifted)) != len(lifted):
                    raise NotSimplicial(
                        (l, pos, coset),
                        'Vertices of degree %d cell %d collide on coset '
                        '%d' % (l, pos, coset),
                    )
                facets.append(lifted)
    K = build_complex(facets, vertex_count=G.vertex_count * act.index)
    for l in range(n + 1):
        expected = G.cell_count(l) * act.index
        if K.count(l) != expected:
            raise NotSimplicial(
                l,
                'Quotient by %r has %d simplices of degree %d, expected '
                '%d' % (act, K.count(l), l, expected),
            )
    logger.debug('Quotient by %r is %r', act, K)
    return K


class ShapiroBijection(object):
    """
    Signed correspondence between the twisted basis, index ``i * N + j``
    for cell i and coset j, and the degree l simplices of the quotient.
    """

    def __init__(self, degree, forward, size):
        """
        :param forward: list indexed by twisted basis index of
            (simplex index, sign) pairs
        :param size: number of degree l simplices of the quotient
        """
        self.degree = degree
        self.forward = tuple(forward)
        self.size = size
        self.inverse = {}
        for twisted, (simplex, sign) in enumerate(self.forward):
            self.inverse.setdefault(simplex, []).append((twisted, sign))

    def __repr__(self):
        return '<ShapiroBijection degree:%d size:%d>' % (
            self.degree, self.size,
        )

    def is_bijective(self):
        return (
            len(self.forward) == self.size and
            len(self.inverse) == self.size and
            all(len(hits) == 1 for hits in self.inverse.values())
        )

    def matrix(self):
        """
        Signed matrix S with ``S[simplex, twisted] = sign``.
        """
        out = np.zeros((self.size, len(self.forward)), dtype=np.int64)
        for twisted, (simplex, sign) in enumerate(self.forward):
            out[simplex, twisted] = sign
        return out


def shapiro_bijection(G, act, l, K=None):
    """
    :param K: quotient complex, built from G and act when not given
    """
    G.check_degree(l)
    if K is None:
        K = quotient_complex(G, act, n=l)
    forward = []
    for pos in range(G.cell_count(l)):
        for coset in range(act.index):
            lifted = _lifted_vertices(G, act, l, pos, coset)
            forward.append((
                K.index[l][tuple(sorted(lifted))],
                permutation_sign(lifted),
            ))
    return ShapiroBijection(l, forward, K.count(l))


@dataclass(frozen=True)
class ShapiroReport(object):
    degree: int
    index: int
    matrices_equal: bool
    max_entry_diff: object
    bijective: bool
    diagnostics: tuple = field(default_factory=tuple)


def _max_abs(matrix):
    if not matrix.size:
        return 0
    value = max(abs(Fraction(entry)) for entry in matrix.flat)
    return int(value) if value.denominator == 1 else value


def verify_shapiro(G, act, l, bijections=None):
    """
    Compares the twisted coboundary d_l with the coboundary of the quotient
    conjugated by the signed basis bijection, in exact arithmetic.

    :param bijections: pair of :class:`ShapiroBijection` for degrees l and
        l+1, computed when not given
    """
    G.check_degree(l, high=G.n - 1)
    K = quotient_complex(G, act, n=l + 1)
    if bijections is None:
        bijections = (
            shapiro_bijection(G, act, l, K=K),
            shapiro_bijection(G, act, l + 1, K=K),
        )
    low, high = bijections
    diagnostics = []
    for bijection in bijections:
        if not bijection.is_bijective():
            diagnostics.append(
                'degree %d basis correspondence is not a bijection' % (
                    bijection.degree,
                )
            )

    quotient_d = cochain_complex(K, top=l + 1).exact_coboundary(l)
    conjugated = linalg.exact_matmul(
        linalg.exact_matmul(linalg.as_exact(high.matrix().T), quotient_d),
        linalg.as_exact(low.matrix()),
    )
    twisted = twisted_coboundary(G, act, l, exact=True)
    diff = _max_abs(conjugated - twisted)
    if diff:
        diagnostics.append(
            'degree %d coboundaries differ by up to %s' % (l, diff)
        )
    report = ShapiroReport(
        degree=l,
        index=act.index,
        matrices_equal=diff == 0,
        max_entry_diff=diff,
        bijective=all(bijection.is_bijective() for bijection in bijections),
        diagnostics=tuple(diagnostics),
    )
    logger.debug('Shapiro check for %r at degree %d: %s', act, l, report)
    return report


def twisted_coboundary(G, act, l, exact=False):
    """
    Coboundary d_l of the twisted complex with coefficients in the
    permutation module of the action, of size
    ``(|Y^{l+1}| * index) x (|Y^l| * index)``.
    """
    G.check_degree(l, high=G.n - 1)
    _check_generators(G, act)
    return evaluate_matrix(G.dual_boundary(l + 1), act, exact=exact)


def twisted_complex(G, act, n=None):
    """
    Twisted cochain complex truncated at n, with exact entries.
    """
    n = G.n if n is None else n
    G.check_degree(n)
    return CochainComplex(
        [twisted_coboundary(G, act, l, exact=True) for l in range(n)],
        dims=[G.cell_count(l) * act.index for l in range(n + 1)],
    )


def quotient_cochain_complex(G, act, n=None):
    n = G.n if n is None else n
    return cochain_complex(quotient_complex(G, act, n=n), top=n)


@dataclass(frozen=True)
class SymbolReport(object):
    degree: int
    index: int
    size: int
    matrices_equal: bool
    max_entry_diff: object
    symmetric: bool


def verify_symbol(G, act, l):
    """
    Compares the evaluated Laplacian symbol D_l with the full Laplacian of
    the twisted complex, in exact arithmetic.
    """
    G.check_degree(l)
    evaluated = evaluate_matrix(G.laplacian_symbol(l), act, exact=True)
    M = twisted_complex(G, act)
    up = M.exact_coboundary(l)
    down = M.exact_coboundary(l - 1)
    laplacian = (
        linalg.exact_matmul(up.T, up) + linalg.exact_matmul(down, down.T)
    )
    diff = _max_abs(evaluated - laplacian)
    return SymbolReport(
        degree=l,
        index=act.index,
        size=evaluated.shape[0],
        matrices_equal=diff == 0,
        max_entry_diff=diff,
        symmetric=not any((evaluated - evaluated.T).flat),
    )


def covering_degree_check(G, act, n=None):
    """
    Compares the l-degree of every quotient vertex with the l-degree of its
    image in the quotient by the whole group.

    :return: list of diagnostic strings, empty when all degrees match
    """
    n = G.n if n is None else n
    K = quotient_complex(G, act, n=n)
    base = quotient_complex(G, CosetAction.trivial(G.generator_count), n=n)
    diagnostics = []
    for l in range(n + 1):
        degrees = vertex_degrees(K, l)
        base_degrees = vertex_degrees(base, l)
        for vertex, degree in enumerate(degrees):
            expected = base_degrees[vertex // act.index]
            if degree != expected:
                diagnostics.append(
                    'vertex %d has %d simplices of degree %d, its image '
                    'has %d' % (vertex, degree, l, expected)
                )
    return diagnostics
