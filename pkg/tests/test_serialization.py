import json
from fractions import Fraction

import numpy as np
import pytest

from hdx import covers, family, hodge
from hdx import serialization as ser
from hdx.errors import ReportFormatError
from hdx.fixtures import fixture_cycle_z, fixture_torus_z2
from hdx.group_ring import GroupRingElement, GroupRingMatrix
from hdx_fixtures import cycle_z

from .complexes import NAMED, cycle


@pytest.fixture(scope='module')
def small_family():
    actions = [fixture_cycle_z(m)[1] for m in (1, 2)]
    return family.family_report(cycle_z.datum(), actions, 1, 0.5)


@pytest.mark.parametrize(
    'value,expected',
    [
        (1.0 / 3, 0.333333333333),
        (2 - np.sqrt(3), 0.267949192431),
        (3.0, 3.0),
        (None, None),
    ]
)
def test_round_float(value, expected):
    assert ser.round_float(value) == expected


@pytest.mark.parametrize(
    'value,text',
    [
        (Fraction(-1, 2), '-1/2'),
        (3, '3'),
        (np.int64(-2), '-2'),
        (Fraction(4, 2), '2'),
    ]
)
def test_exact_to_str(value, text):
    assert ser.exact_to_str(value) == text


@pytest.mark.parametrize('name', sorted(NAMED))
def test_facets_document(name):
    K = NAMED[name]()
    assert ser.complex_from_dict(ser.complex_to_dict(K)) == K


@pytest.mark.parametrize(
    'data',
    [
        {},
        {'facets': [[0, 0]]},
        {'facets': 'nope'},
        [[0, 1]],
    ]
)
def test_bad_facets_document(data):
    with pytest.raises(ReportFormatError):
        ser.complex_from_dict(data)


def test_gamma_document():
    datum, _ = fixture_torus_z2(1, 1)
    data = ser.gamma_to_dict(datum)
    assert sorted(data['cells']) == ['0', '1', '2']
    assert data['cells']['0'][4] == [{'w': [], 'v': 4}]
    assert ser.gamma_from_dict(data) == datum


@pytest.mark.parametrize(
    'data',
    [
        {'generators': 1},
        {'generators': 1, 'cells': {'0': [[{'w': [], 'v': 0}]], '2': []}},
        {'generators': 1, 'cells': {'0': [[{'w': [1], 'v': 0}]]}},
        {'generators': 1, 'cells': {'0': [[{'v': 0}]]}},
        {'generators': 1.5, 'cells': {'0': [[{'w': [], 'v': 0}]]}},
        {'generators': 1, 'cells': {'0': [[{'w': [], 'v': 0.5}]]}},
        {'generators': 1, 'cells': {
            '0': [[{'w': [], 'v': 0}], [{'w': [], 'v': 1}]],
            '1': [[{'w': [], 'v': 0}, {'w': [1.5], 'v': 1}]],
        }},
    ]
)
def test_bad_gamma_document(data):
    with pytest.raises(ReportFormatError):
        ser.gamma_from_dict(data)


def test_action_document():
    _, act = fixture_torus_z2(2, 3)
    data = ser.action_to_dict(act)
    assert data['N'] == 6
    assert data['label'] == 'torus_z2-2x3'
    loaded = ser.action_from_dict(data)
    assert loaded == act
    assert loaded.label == act.label


@pytest.mark.parametrize(
    'data',
    [
        {'N': 2},
        {'N': 2, 'perms': [[0, 0]]},
        {'N': 3, 'perms': [[1, 0]]},
        {'N': 2, 'perms': [[1, 0]], 'identity_coset': 2},
        {'N': 2, 'perms': [[1.9, 0.2]]},
        {'N': 2.0, 'perms': [[1, 0]]},
        {'N': 2, 'perms': [[1, 0]], 'identity_coset': 0.5},
    ]
)
def test_bad_action_document(data):
    with pytest.raises(ReportFormatError):
        ser.action_from_dict(data)


def test_group_ring_documents():
    t = GroupRingElement.from_word([1])
    a = 2 - t + GroupRingElement([([2, -1], Fraction(1, 3))])
    data = ser.element_to_list(a)
    assert {'coeff': '1/3', 'word': [2, -1]} in data
    assert ser.element_from_list(data) == a

    A = GroupRingMatrix([[a, 0], [t, 1]])
    assert ser.matrix_from_list(ser.matrix_to_list(A)) == A


def test_bad_group_ring_document():
    with pytest.raises(ReportFormatError):
        ser.element_from_list([{'coeff': 'one third', 'word': []}])


def test_write_json_is_deterministic(tmpdir):
    data = {'b': [1.5, None], 'a': {'z': 1, 'y': 2}}
    first = tmpdir.join('first.json')
    second = tmpdir.join('second.json')
    ser.write_json(str(first), data)
    ser.write_json(str(second), dict(reversed(list(data.items()))))
    assert first.read() == second.read()
    assert first.read().index('"a"') < first.read().index('"b"')
    assert ser.read_json(str(first)) == data
    assert sorted(path.basename for path in tmpdir.listdir()) == [
        'first.json', 'second.json',
    ]


def test_read_malformed_json(tmpdir):
    path = tmpdir.join('bad.json')
    path.write('{"facets": ')
    with pytest.raises(ReportFormatError):
        ser.read_json(str(path))


def test_load_facets(tmpdir):
    path = tmpdir.join('c3.json')
    path.write(json.dumps({'facets': [[0, 1], [1, 2], [2, 0]]}))
    assert ser.load_facets(str(path)) == cycle(3)


def test_spectrum_report_document():
    M = hodge.cochain_complex(cycle(6))
    report = hodge.spectrum_report(M, 0)
    data = ser.spectrum_report_to_dict(report)
    assert data['betti_exact'] == 1
    assert data['first_nonzero_upper'] == 1.0
    assert ser.spectrum_report_to_dict(
        ser.spectrum_report_from_dict(data)
    ) == data


def test_exact_report_document():
    datum, act = fixture_cycle_z(2)
    data = ser.exact_report_to_dict(covers.verify_shapiro(datum, act, 0))
    assert data == {
        'degree': 0,
        'index': 2,
        'matrices_equal': True,
        'max_entry_diff': '0',
        'bijective': True,
        'diagnostics': [],
    }


def test_family_report_document(small_family):
    data = ser.family_report_to_dict(small_family)
    assert data['uniform_gap_plus'][0] == 1.0
    assert data['gap_witness'] == ['cycle_z-2', None]
    assert data['verdict']['expander_at_scale']
    assert [member['N'] for member in data['members']] == [1, 2]
    loaded = ser.family_report_from_dict(data)
    assert ser.family_report_to_dict(loaded) == data
    assert loaded.verdict == small_family.verdict


def test_family_report_dump_is_stable(small_family, tmpdir):
    first = tmpdir.join('first.json')
    second = tmpdir.join('second.json')
    ser.write_json(str(first), ser.family_report_to_dict(small_family))
    again = family.family_report(
        cycle_z.datum(), [fixture_cycle_z(m)[1] for m in (1, 2)], 1, 0.5,
    )
    ser.write_json(str(second), ser.family_report_to_dict(again))
    assert first.read() == second.read()


def test_bad_family_report_document():
    with pytest.raises(ReportFormatError):
        ser.family_report_from_dict({'n': 1, 'members': []})


def test_family_csv(small_family):
    lines = ser.family_csv(small_family).splitlines()
    assert lines[0] == ','.join(ser.FAMILY_CSV_FIELDS)
    assert len(lines) == 5
    assert lines[1].startswith('cycle_z-1,1,3,0,3.0,,')
    assert lines[1].endswith(',1')
    assert lines[4].startswith('cycle_z-2,2,6,1,')


def test_matrix_csv():
    M = hodge.cochain_complex(cycle(3))
    lines = ser.matrix_csv(M.exact_coboundary(0)).splitlines()
    assert lines[0] == 'row,col,value'
    assert len(lines) == 7
    assert lines[1] == '0,0,-1'
