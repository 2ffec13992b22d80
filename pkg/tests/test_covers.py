from fractions import Fraction

import numpy as np
import pytest

from hdx import covers, hodge
from hdx.covers import CosetAction, GammaComplexData
from hdx.errors import (
    DegreeOutOfRange,
    HDXException,
    InvalidGammaData,
    InvalidPermutation,
    NotSimplicial,
    UnknownGenerator,
)
from hdx.fixtures import fixture_cycle_z, fixture_torus_z2
from hdx.group_ring import coboundary_norm_bound, evaluate_matrix
from hdx.simplicial import (
    coboundary_matrix,
    validate_complex,
    vertex_degree_profile,
)
from hdx_fixtures import cycle_z, torus_z2

from .complexes import cycle
from .mocks import MisSignedGammaData, flipped_bijection


def fixture_cases():
    cases = [fixture_cycle_z(m) for m in range(1, 9)]
    cases += [fixture_torus_z2(1, 1), fixture_torus_z2(2, 1)]
    return cases


FIXTURES = fixture_cases()
FIXTURE_IDS = [act.label for _, act in FIXTURES]


def is_cycle(K, length):
    if K.vertex_count != length or K.count(1) != length:
        return False
    if vertex_degree_profile(K, 1) != [2] * length:
        return False
    return hodge.betti_numbers(hodge.cochain_complex(K)) == [1, 1]


def test_action_from_perms():
    act = covers.coset_action_from_perms([[0]], 1)
    assert act == CosetAction.trivial(1)
    shift = covers.coset_action_from_perms([[1, 2, 3, 0]], 4)
    assert shift == CosetAction.cyclic(4)
    assert shift.apply(0, [1, 1, -1, 1]) == 2
    assert shift.apply(3, [-1]) == 2


@pytest.mark.parametrize(
    'perms,N',
    [
        ([[0, 0, 1]], 3),
        ([[0, 1]], 3),
        ([[0, 1, 3]], 3),
    ]
)
def test_action_rejects_non_bijections(perms, N):
    with pytest.raises(InvalidPermutation):
        covers.coset_action_from_perms(perms, N)


def test_action_is_a_right_action():
    act = CosetAction([[1, 2, 0], [0, 2, 1]])
    for j in range(3):
        assert act.apply(j, [1, 2]) == act.apply(act.apply(j, [1]), [2])
        assert act.apply(act.apply(j, [2, -1]), [1, -2]) == j


def test_action_unknown_generator():
    with pytest.raises(UnknownGenerator):
        CosetAction.cyclic(3).word_permutation([2])


def test_direct_sum_and_transitivity():
    act = CosetAction.cyclic(2).direct_sum(CosetAction.cyclic(3))
    assert act.index == 5
    assert act.perms == ((1, 0, 3, 4, 2),)
    assert not act.is_transitive()
    assert act.orbits() == [[0, 1], [2, 3, 4]]
    assert CosetAction.cyclic(5).is_transitive()
    assert CosetAction.trivial(2).is_transitive()


def test_direct_sum_twisted_complex():
    datum = cycle_z.datum()
    first, second = CosetAction.cyclic(2), CosetAction.cyclic(3)
    total = covers.twisted_complex(datum, first.direct_sum(second))
    parts = [covers.twisted_complex(datum, act) for act in (first, second)]
    assert np.allclose(
        hodge.spectrum(hodge.full_laplacian(total, 0)),
        hodge.sigma_union([
            hodge.spectrum(hodge.full_laplacian(part, 0)) for part in parts
        ]),
    )
    assert hodge.betti_numbers(total) == [2, 2]


def test_datum_rejects_bad_cells():
    with pytest.raises(InvalidGammaData):
        GammaComplexData(1, [[[([1], 0)]]])
    with pytest.raises(InvalidGammaData):
        GammaComplexData(1, [[[([], 0)], [([], 1)]], [[([], 0), ([], 0)]]])
    with pytest.raises(InvalidGammaData):
        GammaComplexData(1, [[[([], 0)], [([], 1)]], [[([], 0), ([2], 1)]]])
    with pytest.raises(InvalidGammaData):
        GammaComplexData(1, [
            [[([], 0)], [([], 1)], [([], 2)]],
            [[([], 0), ([], 1)]],
            [[([], 0), ([], 1), ([], 2)]],
        ])


@pytest.mark.parametrize(
    'generator_count,cells',
    [
        (1.0, [[[([], 0)]]]),
        (1, [[[([], 0.0)]]]),
        (1, [[[([], 0)]], [[([], 0), ([0.5], 0)]]]),
    ]
)
def test_datum_rejects_non_integers(generator_count, cells):
    with pytest.raises(HDXException):
        GammaComplexData(generator_count, cells)


def test_action_rejects_non_integers():
    with pytest.raises(InvalidPermutation):
        CosetAction([[1.9, 0.2]])
    with pytest.raises(InvalidPermutation):
        CosetAction([[1, 0]], identity_coset=1.0)
    act = CosetAction([np.array([1, 0])], index=np.int64(2))
    assert act == CosetAction.cyclic(2)


def test_cycle_boundary_matrix():
    datum = cycle_z.datum()
    boundary = datum.boundary_gr[1]
    assert boundary.shape == (3, 3)
    assert repr(boundary[2, 2]) == '-1'
    assert repr(boundary[0, 2]) == 't1^-1'
    A = datum.dual_boundary(1)
    assert repr(A[2, 0]) == 't1'


def test_datum_truncate():
    datum = torus_z2.datum()
    assert datum.n == 2
    truncated = datum.truncate(1)
    assert truncated.n == 1
    assert truncated.cells == datum.cells[:2]
    with pytest.raises(DegreeOutOfRange):
        datum.dual_boundary(3)


@pytest.mark.parametrize('m', range(1, 6))
def test_validate_cycle_datum(m):
    assert covers.validate_gamma_data(
        cycle_z.datum(), [CosetAction.cyclic(m)]
    ) == []


def test_validate_torus_datum():
    actions = [torus_z2.product_action(m1, m2)
               for m1, m2 in ((1, 1), (2, 1), (2, 3))]
    assert covers.validate_gamma_data(torus_z2.datum(), actions) == []


def test_validate_reports_mis_signed_boundary():
    datum = torus_z2.datum()
    faulty = MisSignedGammaData(
        datum.generator_count, datum.cells, degree=1, row=0, col=0,
    )
    diagnostics = covers.validate_gamma_data(
        faulty, [torus_z2.product_action(1, 1)]
    )
    assert any('d_1 d_0 != 0' in msg for msg in diagnostics)


def test_validate_reports_generator_mismatch():
    diagnostics = covers.validate_gamma_data(
        torus_z2.datum(), [CosetAction.cyclic(2)]
    )
    assert len(diagnostics) == 1


def test_validate_reports_inconsistent_faces():
    # the face (t1.0, t1 t2.1) is a translate of (e.0, e.1) only where t2
    # acts trivially
    datum = GammaComplexData(2, [
        [[([], 0)], [([], 1)], [([], 2)]],
        [
            [([], 0), ([], 1)],
            [([], 1), ([], 2)],
            [([], 0), ([], 2)],
        ],
        [[([], 2), ([1], 0), ([1, 2], 1)]],
    ])
    act = CosetAction([[1, 0], [1, 0]])
    diagnostics = covers.validate_gamma_data(datum, [act])
    assert any('not a translate' in msg for msg in diagnostics)


@pytest.mark.parametrize('m', [1, 2, 5])
def test_cycle_quotients(m):
    datum, act = fixture_cycle_z(m)
    K = covers.quotient_complex(datum, act)
    assert is_cycle(K, 3 * m)
    assert validate_complex(K) == []


def test_trivial_quotient_is_triangle_boundary():
    datum, act = fixture_cycle_z(1)
    assert covers.quotient_complex(datum, act) == cycle(3)


def two_orbit_line():
    # the integer line with even and odd vertices in separate orbits
    return GammaComplexData(1, [
        [[([], 0)], [([], 1)]],
        [[([], 0), ([], 1)], [([], 1), ([1], 0)]],
    ])


def loop_line():
    # the integer line with a single orbit of vertices
    return GammaComplexData(1, [
        [[([], 0)]],
        [[([], 0), ([1], 0)]],
    ])


def one_orbit_plane():
    # triangulated plane with a single orbit of vertices, the last triangle
    # only meets its diagonal up to the commutator of t1 and t2
    return GammaComplexData(2, [
        [[([], 0)]],
        [
            [([], 0), ([1], 0)],
            [([], 0), ([2], 0)],
            [([], 0), ([1, 2], 0)],
        ],
        [
            [([], 0), ([1], 0), ([1, 2], 0)],
            [([], 0), ([2], 0), ([2, 1], 0)],
        ],
    ])


def test_two_orbit_line_faces():
    datum = two_orbit_line()
    faces = datum.faces[1][1]
    assert [face.target for face in faces] == [0, 1]
    assert all(face.formal for face in faces)
    assert repr(datum.boundary_gr[1][0, 1]) == 't1^-1'
    assert repr(datum.boundary_gr[1][1, 1]) == '-1'


@pytest.mark.parametrize('m', [2, 3, 5])
def test_two_orbit_line_quotients(m):
    datum, act = two_orbit_line(), CosetAction.cyclic(m)
    assert covers.validate_gamma_data(datum, [act]) == []
    assert is_cycle(covers.quotient_complex(datum, act), 2 * m)
    assert covers.verify_shapiro(datum, act, 0).matrices_equal


def test_two_orbit_line_folds_on_trivial_action():
    # both edges lift to the single edge between the two vertices
    datum, act = two_orbit_line(), CosetAction.trivial(1)
    with pytest.raises(NotSimplicial):
        covers.quotient_complex(datum, act)
    assert len(covers.validate_gamma_data(datum, [act])) == 1


@pytest.mark.parametrize('m', [1, 2])
def test_loop_line_not_simplicial(m):
    datum, act = loop_line(), CosetAction.cyclic(m)
    with pytest.raises(NotSimplicial):
        covers.quotient_complex(datum, act)
    diagnostics = covers.validate_gamma_data(datum, [act])
    assert len(diagnostics) == 1
    assert diagnostics[0].startswith('cyclic-%d: ' % m)


def test_loop_line_collision_diagnostic():
    diagnostics = covers.validate_gamma_data(
        loop_line(), [CosetAction.cyclic(1)]
    )
    assert diagnostics == [
        'cyclic-1: vertices of degree 1 cell 0 collide on coset 0',
    ]


@pytest.mark.parametrize('m', [3, 4, 7])
def test_loop_line_quotients(m):
    datum, act = loop_line(), CosetAction.cyclic(m)
    assert covers.validate_gamma_data(datum, [act]) == []
    K = covers.quotient_complex(datum, act)
    assert is_cycle(K, m)
    assert covers.shapiro_bijection(datum, act, 1, K=K).is_bijective()


def test_one_orbit_plane_faces():
    datum = one_orbit_plane()
    assert [face.target for face in datum.faces[2][0]] == [1, 2, 0]
    assert all(face.formal for face in datum.faces[2][0])
    diagonal = datum.faces[2][1][1]
    assert not diagonal.formal
    assert diagonal.target == 2
    assert diagonal.pairing == (0, 1)


@pytest.mark.parametrize('m1,m2', [(3, 3), (3, 4)])
def test_one_orbit_plane_quotients(m1, m2):
    datum = one_orbit_plane()
    act = torus_z2.product_action(m1, m2)
    assert covers.validate_gamma_data(datum, [act]) == []
    K = covers.quotient_complex(datum, act)
    assert K.vertex_count == m1 * m2
    assert hodge.betti_numbers(hodge.cochain_complex(K)) == [1, 2, 1]
    assert covers.verify_shapiro(datum, act, 1).matrices_equal


def test_one_orbit_plane_needs_commuting_generators():
    act = CosetAction([[1, 2, 0], [1, 0, 2]])
    diagnostics = covers.validate_gamma_data(one_orbit_plane(), [act])
    assert any('not a translate' in msg for msg in diagnostics)


def test_two_vertex_cycle_quotient():
    datum = GammaComplexData(1, [
        [[([], 0)], [([], 1)]],
        [[([], 0), ([], 1)]],
    ])
    K = covers.quotient_complex(datum, CosetAction.cyclic(3))
    assert K.count(1) == 3
    assert hodge.betti_numbers(hodge.cochain_complex(K)) == [3, 0]


def test_quotient_generator_mismatch():
    datum, _ = fixture_torus_z2(1, 1)
    with pytest.raises(UnknownGenerator):
        covers.quotient_complex(datum, CosetAction.cyclic(2))


@pytest.mark.parametrize('datum,act', FIXTURES, ids=FIXTURE_IDS)
def test_simplex_counts(datum, act):
    K = covers.quotient_complex(datum, act)
    for l in range(datum.n + 1):
        assert K.count(l) == datum.cell_count(l) * act.index


@pytest.mark.parametrize('datum,act', FIXTURES, ids=FIXTURE_IDS)
def test_covering_degrees(datum, act):
    assert covers.covering_degree_check(datum, act) == []
    K = covers.quotient_complex(datum, act)
    base = covers.quotient_complex(
        datum, CosetAction.trivial(datum.generator_count)
    )
    for l in range(datum.n + 1):
        assert sorted(vertex_degree_profile(K, l)) == sorted(
            vertex_degree_profile(base, l) * act.index
        )


@pytest.mark.parametrize('datum,act', FIXTURES, ids=FIXTURE_IDS)
def test_twisted_chain_identity(datum, act):
    for l in range(datum.n - 1):
        first = covers.twisted_coboundary(datum, act, l, exact=True)
        second = covers.twisted_coboundary(datum, act, l + 1, exact=True)
        assert not any(second.dot(first).flat)


def test_twisted_coboundary_trivial_action():
    # the third edge runs from c to t.a, against the sorted orientation
    datum, act = fixture_cycle_z(1)
    twisted = covers.twisted_coboundary(datum, act, 0)
    low = covers.shapiro_bijection(datum, act, 0)
    high = covers.shapiro_bijection(datum, act, 1)
    assert high.forward == ((0, 1), (2, 1), (1, -1))
    d = coboundary_matrix(cycle(3), 0)
    assert np.array_equal(twisted, high.matrix().T.dot(d).dot(low.matrix()))


def test_twisted_coboundary_degree_out_of_range():
    datum, act = fixture_cycle_z(2)
    with pytest.raises(DegreeOutOfRange):
        covers.twisted_coboundary(datum, act, 1)


@pytest.mark.parametrize('m', range(1, 9))
def test_shapiro_bijection_cycle(m):
    datum, act = fixture_cycle_z(m)
    for l in range(2):
        bijection = covers.shapiro_bijection(datum, act, l)
        assert bijection.is_bijective()
        assert sorted(simplex for simplex, _ in bijection.forward) == \
            list(range(3 * m))
        for twisted, (simplex, sign) in enumerate(bijection.forward):
            assert bijection.inverse[simplex] == [(twisted, sign)]
        S = bijection.matrix()
        assert np.array_equal(S.T.dot(S), np.eye(3 * m))


def test_shapiro_bijection_trivial_action_signs():
    datum, act = fixture_cycle_z(1)
    bijection = covers.shapiro_bijection(datum, act, 1)
    # the last edge is decorated from vertex 2 to vertex 0
    assert [sign for _, sign in bijection.forward] == [1, 1, -1]


@pytest.mark.parametrize('m', range(1, 9))
def test_shapiro_exact_cycle(m):
    datum, act = fixture_cycle_z(m)
    report = covers.verify_shapiro(datum, act, 0)
    assert report.matrices_equal
    assert report.max_entry_diff == 0
    assert report.bijective


@pytest.mark.parametrize('m1,m2', [(1, 1), (2, 1), (1, 2)])
@pytest.mark.parametrize('l', [0, 1])
def test_shapiro_exact_torus(m1, m2, l):
    datum, act = fixture_torus_z2(m1, m2)
    report = covers.verify_shapiro(datum, act, l)
    assert report.matrices_equal
    assert report.diagnostics == ()


def test_shapiro_detects_sign_fault():
    datum, act = fixture_cycle_z(3)
    low = covers.shapiro_bijection(datum, act, 0)
    high = covers.shapiro_bijection(datum, act, 1)
    report = covers.verify_shapiro(
        datum, act, 0, bijections=(low, flipped_bijection(high, 4)),
    )
    assert not report.matrices_equal
    assert report.max_entry_diff == 2


@pytest.mark.parametrize('datum,act', FIXTURES, ids=FIXTURE_IDS)
def test_upper_spectra_transfer(datum, act):
    quotient = covers.quotient_cochain_complex(datum, act)
    twisted = covers.twisted_complex(datum, act)
    for l in range(datum.n + 1):
        assert np.allclose(
            hodge.spectrum(hodge.upper_laplacian(quotient, l)),
            hodge.spectrum(hodge.upper_laplacian(twisted, l)),
            atol=1e-10,
        )


@pytest.mark.parametrize('datum,act', FIXTURES, ids=FIXTURE_IDS)
def test_laplacian_symbol_is_twisted_laplacian(datum, act):
    for l in range(datum.n + 1):
        report = covers.verify_symbol(datum, act, l)
        assert report.matrices_equal
        assert report.max_entry_diff == 0
        assert report.symmetric
        values = hodge.spectrum(
            evaluate_matrix(datum.laplacian_symbol(l), act)
        )
        assert values.min() >= -1e-10 * max(1.0, values.max())


@pytest.mark.parametrize('m', [1, 4])
def test_symbol_evaluates_to_cycle_laplacian(m):
    datum, act = fixture_cycle_z(m)
    K = covers.quotient_complex(datum, act)
    D0 = evaluate_matrix(datum.laplacian_symbol(0), act)
    expected = hodge.upper_laplacian(hodge.cochain_complex(K), 0)
    assert np.allclose(hodge.spectrum(D0), hodge.spectrum(expected))


def test_twisted_coboundary_norm_bound():
    datum = cycle_z.datum()
    A = datum.dual_boundary(1)
    bound = coboundary_norm_bound(A)
    rng = np.random.RandomState(7)
    for _ in range(20):
        index = rng.randint(1, 12)
        act = CosetAction([list(rng.permutation(index))], index=index)
        d = covers.twisted_coboundary(datum, act, 0)
        assert np.linalg.norm(d, 2) <= bound * (1 + 1e-12)
        assert np.linalg.norm(d, axis=0).max() <= bound


def test_exact_twisted_entries():
    datum, act = fixture_torus_z2(1, 1)
    d = covers.twisted_coboundary(datum, act, 1, exact=True)
    assert all(isinstance(x, Fraction) for x in d.flat)
