from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hdx.covers import CosetAction
from hdx.errors import DimensionMismatch, InvalidParameter, UnknownGenerator
from hdx.group_ring import (
    GroupRingElement,
    GroupRingMatrix,
    Word,
    coboundary_norm_bound,
    evaluate,
    evaluate_matrix,
    gr_add,
    gr_involute,
    gr_multiply,
    grm_involute_transpose,
    grm_product,
    laplacian_symbol,
    symbol_rayleigh_quotient,
)
from hdx.hodge import rayleigh_quotient, spectrum

T = GroupRingElement.from_word([1])
T_INV = GroupRingElement.from_word([-1])
ONE = GroupRingElement.one()

letters = st.sampled_from([1, -1, 2, -2])
words = st.lists(letters, max_size=4).map(Word)
elements = st.lists(
    st.tuples(words, st.integers(-3, 3)), max_size=3,
).map(GroupRingElement)


@st.composite
def actions(draw, generator_count=2):
    index = draw(st.integers(1, 5))
    perms = [
        draw(st.permutations(range(index)))
        for _ in range(generator_count)
    ]
    return CosetAction(perms, index=index)


@st.composite
def matrices(draw, rows=2, cols=2):
    return GroupRingMatrix(
        [[draw(elements) for _ in range(cols)] for _ in range(rows)],
        rows=rows,
        cols=cols,
    )


def test_word_free_reduction():
    assert Word([1, 2, -2, -1, 1]) == Word([1])
    assert Word([1, -1]).letters == ()
    assert repr(Word([])) == 'e'
    assert repr(Word([1, -2])) == 't1 t2^-1'


def test_word_inverse():
    word = Word([1, 2, -1])
    assert word.inverse() == Word([1, -2, -1])
    assert word * word.inverse() == Word()


@pytest.mark.parametrize(
    'letters',
    [
        [1, 0],
        [1.5],
        [2.0],
        ['1'],
    ]
)
def test_word_rejects_bad_letters(letters):
    with pytest.raises(InvalidParameter):
        Word(letters)


def test_word_accepts_numpy_letters():
    assert Word(np.array([1, -2])) == Word([1, -2])


def test_product_with_inverse():
    assert gr_multiply(T, T_INV) == ONE
    assert gr_multiply(T, T_INV) == 1


def test_product_expansion():
    result = gr_multiply(T - 1, T_INV - 1)
    assert result == 2 - T - T_INV
    assert result.coefficient([]) == 2
    assert result.coefficient([1]) == -1


def test_product_with_zero():
    assert gr_multiply(T - 1, GroupRingElement.zero()).is_zero()


def test_zero_coefficients_are_dropped():
    assert gr_add(T, -T).is_zero()
    assert len(GroupRingElement([([1], 2), ([1], -2), ([], 1)])) == 1


def test_involute_examples():
    assert gr_involute(T - 1) == T_INV - 1
    symmetric = 2 - T - T_INV
    assert gr_involute(symmetric) == symmetric


def test_l1_norm():
    assert (T - 1).l1_norm() == 2
    assert GroupRingElement([([1], Fraction(-1, 2)), ([], 3)]).l1_norm() == \
        Fraction(7, 2)


@given(a=elements)
def test_involution_is_involutive(a):
    assert a.involute().involute() == a


@given(a=elements, b=elements)
def test_involution_reverses_products(a, b):
    assert gr_involute(a * b) == gr_involute(b) * gr_involute(a)


@given(a=elements, b=elements, c=elements)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a


def test_matrix_symbol_of_single_entry():
    A = GroupRingMatrix([[T - 1]])
    product = grm_product(grm_involute_transpose(A), A)
    assert product == GroupRingMatrix([[2 - T - T_INV]])


@given(A=matrices(2, 3))
def test_double_involute_transpose(A):
    assert A.involute_transpose().involute_transpose() == A
    assert A.involute_transpose().shape == (3, 2)


@given(A=matrices(2, 2))
def test_identity_is_unit(A):
    identity = GroupRingMatrix.identity(2)
    assert grm_product(identity, A) == A
    assert grm_product(A, identity) == A


def test_product_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        grm_product(GroupRingMatrix.zeros(2, 3), GroupRingMatrix.zeros(2, 3))


def test_laplacian_symbol_truncations():
    A = GroupRingMatrix([[T - 1], [1 - T_INV]])
    assert laplacian_symbol(A, None) == grm_product(A, A.involute_transpose())
    assert laplacian_symbol(None, None, size=3) == GroupRingMatrix.zeros(3, 3)
    with pytest.raises(DimensionMismatch):
        laplacian_symbol(A, GroupRingMatrix.zeros(1, 3))


def test_laplacian_symbol_is_self_adjoint():
    A_1 = GroupRingMatrix([[-1, T], [1, -1]])
    D = laplacian_symbol(None, A_1)
    assert D.involute_transpose() == D


def test_evaluate_one():
    act = CosetAction.cyclic(4)
    assert np.array_equal(evaluate(ONE, act), np.eye(4))


def test_evaluate_generator():
    act = CosetAction.cyclic(4)
    expected = np.zeros((4, 4))
    for j in range(4):
        expected[j, (j + 1) % 4] = 1
    assert np.array_equal(evaluate(T, act), expected)


@pytest.mark.parametrize('m', [1, 2, 5, 8])
def test_evaluate_circulant_spectrum(m):
    act = CosetAction.cyclic(m)
    values = spectrum(evaluate(2 - T - T_INV, act))
    closed_form = sorted(2 - 2 * np.cos(2 * np.pi * j / m) for j in range(m))
    assert np.allclose(values, closed_form, atol=1e-9)


def test_evaluate_exact_entries():
    act = CosetAction.cyclic(3)
    a = GroupRingElement([([1], Fraction(1, 3)), ([], 2)])
    out = evaluate(a, act, exact=True)
    assert out[0, 1] == Fraction(1, 3)
    assert out[2, 2] == 2


def test_evaluate_unknown_generator():
    with pytest.raises(UnknownGenerator):
        evaluate(GroupRingElement.from_word([2]), CosetAction.cyclic(3))


@settings(max_examples=50)
@given(a=elements, b=elements, act=actions())
def test_evaluate_is_homomorphism(a, b, act):
    assert np.allclose(
        evaluate(a * b, act), evaluate(a, act).dot(evaluate(b, act))
    )
    assert np.allclose(evaluate(a + b, act), evaluate(a, act) +
                       evaluate(b, act))


@settings(max_examples=50)
@given(a=elements, act=actions())
def test_evaluate_involution_is_transpose(a, act):
    assert np.array_equal(evaluate(a.involute(), act), evaluate(a, act).T)


def test_evaluate_matrix_identity():
    act = CosetAction.cyclic(3)
    assert np.array_equal(
        evaluate_matrix(GroupRingMatrix.identity(2), act), np.eye(6)
    )


@settings(max_examples=50)
@given(A=matrices(2, 2), act=actions())
def test_evaluate_matrix_involute_transpose(A, act):
    assert np.array_equal(
        evaluate_matrix(A.involute_transpose(), act),
        evaluate_matrix(A, act).T,
    )


@settings(max_examples=30)
@given(A=matrices(2, 3), B=matrices(3, 2), act=actions())
def test_evaluate_matrix_is_multiplicative(A, B, act):
    assert np.allclose(
        evaluate_matrix(grm_product(A, B), act),
        evaluate_matrix(A, act).dot(evaluate_matrix(B, act)),
    )


def test_coboundary_norm_bound_examples():
    bound = coboundary_norm_bound(GroupRingMatrix([[T - 1]]))
    assert isinstance(bound, Fraction)
    assert bound == 2
    assert coboundary_norm_bound(GroupRingMatrix.zeros(2, 3)) == 0
    half = GroupRingElement.from_word([1], Fraction(1, 2))
    assert coboundary_norm_bound(GroupRingMatrix([[half]])) == Fraction(1, 2)


def test_coboundary_norm_bound_irrational():
    bound = coboundary_norm_bound(GroupRingMatrix([[T - 1, T]]))
    assert isinstance(bound, float)
    assert bound >= np.sqrt(5)
    assert bound == pytest.approx(np.sqrt(5), rel=1e-15)


@settings(max_examples=30)
@given(A=matrices(2, 2), act=actions())
def test_coboundary_norm_bound_holds(A, act):
    norm = np.linalg.norm(evaluate_matrix(A, act), 2)
    assert norm <= coboundary_norm_bound(A) * (1 + 1e-12) + 1e-12


@settings(max_examples=30)
@given(A=matrices(2, 2), act=actions(), data=st.data())
def test_symbol_rayleigh_quotient(A, act, data):
    D = grm_product(A.involute_transpose(), A)
    vectors = [
        np.array(data.draw(st.lists(
            st.integers(-5, 5), min_size=act.index, max_size=act.index,
        )), dtype=float)
        for _ in range(2)
    ]
    if not any(v.any() for v in vectors):
        vectors[0][0] = 1.0
    expected = rayleigh_quotient(
        evaluate_matrix(D, act), np.concatenate(vectors)
    )
    assert symbol_rayleigh_quotient(D, act, vectors) == \
        pytest.approx(expected, abs=1e-9)
    assert expected >= -1e-9
