"""
Formal group ring arithmetic over words in the generators of a group, the
anti-involution, matrices over the group ring and their evaluation under a
permutation action on cosets.

Words are only freely reduced, relations of the group are never applied
formally. Every statement about elements that are equal in the group but not
as reduced words is made after evaluation, where the relations hold.
"""
import logging
import math
import operator
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import DimensionMismatch, InvalidParameter, ZeroVector

logger = logging.getLogger(__name__)


class Word(object):
    """
    Freely reduced word in signed generator indices, ``g`` for the generator
    ``g >= 1`` and ``-g`` for its inverse.
    """
    __slots__ = ('letters',)

    def __init__(self, letters=()):
        reduced = []
        for letter in letters:
            try:
                letter = operator.index(letter)
            except TypeError:
                raise InvalidParameter(
                    letters, 'Generator index %r is not an integer' % (letter,)
                )
            if letter == 0:
                raise InvalidParameter(
                    letters, 'Generator indices start at 1, got 0'
                )
            if reduced and reduced[-1] == -letter:
                reduced.pop()
            else:
                reduced.append(letter)
        self.letters = tuple(reduced)

    def __repr__(self):
        if not self.letters:
            return 'e'
        return ' '.join(
            't%d' % letter if letter > 0 else 't%d^-1' % -letter
            for letter in self.letters
        )

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def sort_key(self):
        return (len(self.letters), self.letters)

    def inverse(self):
        return Word(-letter for letter in reversed(self.letters))


def as_word(word):
    if isinstance(word, Word):
        return word
    return Word(word)


class GroupRingElement(object):
    """
    Finite formal sum of words with nonzero rational coefficients.
    """

    def __init__(self, terms=None):
        """
        :param terms: mapping or iterable of (word, coefficient) pairs, words
            may be given as letter sequences; repeated words are added up
        """
        self._terms = {}
        if terms is None:
            terms = ()
        elif isinstance(terms, dict):
            terms = terms.items()
        for word, coeff in terms:
            self._add_term(as_word(word), Fraction(coeff))

    def _add_term(self, word, coeff):
        total = self._terms.get(word, Fraction(0)) + coeff
        if total:
            self._terms[word] = total
        else:
            self._terms.pop(word, None)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({Word(): 1})

    @classmethod
    def from_word(cls, word, coeff=1):
        return cls({as_word(word): coeff})

    @classmethod
    def coerce(cls, value):
        """
        Turns scalars and words into group ring elements.
        """
        if isinstance(value, GroupRingElement):
            return value
        if isinstance(value, Word):
            return cls.from_word(value)
        if isinstance(value, (int, np.integer, Fraction)):
            return cls({Word(): value})
        raise InvalidParameter(
            value, 'Cannot turn %r into a group ring element' % (value,)
        )

    def items(self):
        """
        (word, coefficient) pairs in a deterministic order.
        """
        return sorted(self._terms.items(), key=lambda item: item[0])

    def coefficient(self, word):
        return self._terms.get(as_word(word), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return not self.is_zero()

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, np.integer, Fraction, Word)):
            other = GroupRingElement.coerce(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return '0'
        chunks = []
        for word, coeff in self.items():
            if not word.letters:
                chunk = str(abs(coeff))
            elif abs(coeff) == 1:
                chunk = repr(word)
            else:
                chunk = '%s %r' % (abs(coeff), word)
            if not chunks:
                chunks.append(chunk if coeff > 0 else '-' + chunk)
            else:
                chunks.append(('+ ' if coeff > 0 else '- ') + chunk)
        return ' '.join(chunks)

    def __neg__(self):
        return GroupRingElement(
            (word, -coeff) for word, coeff in self._terms.items()
        )

    def __add__(self, other):
        other = GroupRingElement.coerce(other)
        result = GroupRingElement(self._terms)
        for word, coeff in other._terms.items():
            result._add_term(word, coeff)
        return result

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-GroupRingElement.coerce(other))

    def __rsub__(self, other):
        return GroupRingElement.coerce(other) - self

    def __mul__(self, other):
        other = GroupRingElement.coerce(other)
        result = GroupRingElement()
        for left_word, left_coeff in self._terms.items():
            for right_word, right_coeff in other._terms.items():
                result._add_term(left_word * right_word,
                                 left_coeff * right_coeff)
        return result

    def __rmul__(self, other):
        return GroupRingElement.coerce(other) * self

    def involute(self):
        """
        The anti-involution, sum of z g mapped to sum of conj(z) g^-1 (the
        coefficients are rational, so conjugation is the identity).
        """
        return GroupRingElement(
            (word.inverse(), coeff) for word, coeff in self._terms.items()
        )

    def l1_norm(self):
        """
        Sum of the absolute values of the coefficients, a bound for the
        operator norm of the element under any unitary representation.
        """
        return sum((abs(coeff) for coeff in self._terms.values()),
                   Fraction(0))


def gr_add(a, b):
    return GroupRingElement.coerce(a) + GroupRingElement.coerce(b)


def gr_multiply(a, b):
    return GroupRingElement.coerce(a) * GroupRingElement.coerce(b)


def gr_involute(a):
    return GroupRingElement.coerce(a).involute()


class GroupRingMatrix(object):
    """
    Dense matrix with group ring entries.
    """

    def __init__(self, entries, rows=None, cols=None):
        """
        :param entries: list of rows, each a list of entries that
            :meth:`GroupRingElement.coerce` accepts
        :param rows: number of rows, needed for matrices without rows
        :param cols: number of columns, needed for matrices without rows
        """
        self.entries = tuple(
            tuple(GroupRingElement.coerce(entry) for entry in row)
            for row in entries
        )
        self.rows = len(self.entries) if rows is None else rows
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise DimensionMismatch(
                entries,
                'Entries do not form a %dx%d matrix' % (self.rows, self.cols),
            )

    @classmethod
    def zeros(cls, rows, cols):
        return cls(
            [[GroupRingElement()] * cols for _ in range(rows)],
            rows=rows,
            cols=cols,
        )

    @classmethod
    def identity(cls, size):
        return cls(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)],
            rows=size,
            cols=size,
        )

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, pos):
        row, col = pos
        return self.entries[row][col]

    def __eq__(self, other):
        if not isinstance(other, GroupRingMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return '<GroupRingMatrix %dx%d>' % self.shape

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(
                (self.shape, other.shape),
                'Cannot add %dx%d and %dx%d matrices' % (
                    self.shape + other.shape
                ),
            )
        return GroupRingMatrix(
            [
                [a + b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(self.entries, other.entries)
            ],
            rows=self.rows,
            cols=self.cols,
        )

    def __mul__(self, other):
        return grm_product(self, other)

    def is_zero(self):
        return all(entry.is_zero() for row in self.entries for entry in row)

    def involute_transpose(self):
        return grm_involute_transpose(self)


def grm_product(A, B):
    if A.cols != B.rows:
        raise DimensionMismatch(
            (A.shape, B.shape),
            'Cannot multiply %dx%d by %dx%d' % (A.shape + B.shape),
        )
    entries = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            total = GroupRingElement()
            for k in range(A.cols):
                if A.entries[i][k] and B.entries[k][j]:
                    total = total + A.entries[i][k] * B.entries[k][j]
            row.append(total)
        entries.append(row)
    return GroupRingMatrix(entries, rows=A.rows, cols=B.cols)


def grm_involute_transpose(A):
    """
    Transpose of A with the anti-involution applied entrywise.
    """
    return GroupRingMatrix(
        [[A.entries[i][j].involute() for i in range(A.rows)]
         for j in range(A.cols)],
        rows=A.cols,
        cols=A.rows,
    )


def laplacian_symbol(A_l, A_next, size=None):
    """
    Group ring matrix whose evaluation under any permutation action is the
    full Laplacian of the twisted cochain complex::

        D_l = iota(A_{l+1})^T A_{l+1} + A_l iota(A_l)^T

    :param A_l: matrix of the dual boundary arriving at degree l (cells of
        degree l by cells of degree l-1), None at the bottom of the range
    :param A_next: matrix of the dual boundary leaving degree l (cells of
        degree l+1 by cells of degree l), None at the top of the truncation
    :param size: number of degree l cells, only needed when both are None
    """
    if A_l is not None and A_next is not None and A_l.rows != A_next.cols:
        raise DimensionMismatch(
            (A_l.shape, A_next.shape),
            'A_l has %d rows but A_l+1 has %d columns' % (
                A_l.rows, A_next.cols,
            ),
        )
    if A_l is not None:
        size = A_l.rows
    elif A_next is not None:
        size = A_next.cols
    if size is None:
        raise DimensionMismatch(None, 'Cannot size an empty Laplacian symbol')

    symbol = GroupRingMatrix.zeros(size, size)
    if A_next is not None:
        symbol = symbol + grm_product(A_next.involute_transpose(), A_next)
    if A_l is not None:
        symbol = symbol + grm_product(A_l, A_l.involute_transpose())
    return symbol


def _word_images(word, act, cache):
    if cache is None:
        return act.word_permutation(word)
    if word not in cache:
        cache[word] = act.word_permutation(word)
    return cache[word]


def evaluate(a, act, exact=False, cache=None):
    """
    Image of a group ring element under the permutation representation of a
    coset action.

    The word u maps to the matrix with a one at (j, j.u) for every coset j,
    so words multiply like their matrices and the anti-involution becomes
    the transpose.

    :param a: group ring element (or anything :meth:`coerce` accepts)
    :param act: coset action, anything exposing ``index`` and
        ``word_permutation``
    :param exact: if True return an object array of Fractions instead of
        floats
    :param cache: optional dict reused across calls to memoize word images
    """
    a = GroupRingElement.coerce(a)
    size = act.index
    if exact:
        out = linalg.exact_zeros(size, size)
    else:
        out = np.zeros((size, size))
    rows = np.arange(size)
    for word, coeff in a.items():
        images = _word_images(word, act, cache)
        if exact:
            for row, col in zip(rows, images):
                out[row, col] += coeff
        else:
            np.add.at(out, (rows, images), float(coeff))
    return out


def evaluate_matrix(A, act, exact=False):
    """
    Block matrix whose (i, j) block of size index x index is the evaluation
    of the (i, j) entry of A.
    """
    size = act.index
    if exact:
        out = linalg.exact_zeros(A.rows * size, A.cols * size)
    else:
        out = np.zeros((A.rows * size, A.cols * size))
    cache = {}
    for i in range(A.rows):
        for j in range(A.cols):
            entry = A.entries[i][j]
            if entry.is_zero():
                continue
            out[i * size:(i + 1) * size, j * size:(j + 1) * size] = \
                evaluate(entry, act, exact=exact, cache=cache)
    return out


def coboundary_norm_bound(A):
    """
    Upper bound for the operator norm of the evaluation of A under every
    coset action: the square root of the sum over the entries of their
    squared coefficient l1 norms.

    :return: the exact :class:`Fraction` when that square root is rational,
        a float rounded upwards otherwise
    """
    total = sum(
        (entry.l1_norm() ** 2 for row in A.entries for entry in row),
        Fraction(0),
    )
    numerator = math.isqrt(total.numerator)
    denominator = math.isqrt(total.denominator)
    if numerator ** 2 == total.numerator and \
            denominator ** 2 == total.denominator:
        return Fraction(numerator, denominator)
    return math.nextafter(math.sqrt(total), math.inf)


def symbol_rayleigh_quotient(D, act, vectors):
    """
    Rayleigh quotient of the evaluated symbol D on the vector made of the
    given blocks, computed term by term from the words of D::

        sum_ij <v_i, pi(d_ij) v_j> / sum_i |v_i|^2

    :param D: square group ring matrix
    :param act: coset action
    :param vectors: one vector of size ``act.index`` per row of D
    """
    if len(vectors) != D.rows or D.rows != D.cols:
        raise DimensionMismatch(
            vectors, 'Need %d blocks for a %dx%d symbol' % (
                D.rows, D.rows, D.cols,
            ),
        )
    vectors = [np.asarray(v, dtype=float) for v in vectors]
    denominator = sum(float(v.dot(v)) for v in vectors)
    if denominator == 0.0:
        raise ZeroVector(vectors, 'Rayleigh quotient of the zero vector')
    cache = {}
    numerator = 0.0
    for i in range(D.rows):
        for j in range(D.cols):
            for word, coeff in D.entries[i][j].items():
                images = _word_images(word, act, cache)
                numerator += float(coeff) * float(
                    vectors[i].dot(vectors[j][images])
                )
    return numerator / denominator
