"""
JSON and CSV formats of the inputs and reports.

Reports are written deterministically: keys are sorted, floats rounded to 12
significant digits and files replaced atomically.
"""
import csv
import dataclasses
import functools
import io
import json
import logging
import os
import tempfile
from fractions import Fraction

from .covers import GammaComplexData, coset_action_from_perms
from .errors import HDXException, ReportFormatError
from .family import DegreeSummary, FamilyReport, MemberReport, Verdict
from .group_ring import GroupRingElement, GroupRingMatrix
from .hodge import SpectrumReport
from .simplicial import build_complex, maximal_simplices

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12


def round_float(value):
    if value is None:
        return None
    return float('%.*g' % (SIGNIFICANT_DIGITS, value))


def _round_all(values):
    return [round_float(value) for value in values]


def exact_to_str(value):
    """
    Exact integers and rationals as strings, ``"p"`` or ``"p/q"``.
    """
    return str(Fraction(value))


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    handle = tempfile.NamedTemporaryFile(
        mode='w',
        dir=directory,
        prefix='.%s.' % os.path.basename(path),
        delete=False,
    )
    try:
        with handle:
            handle.write(text)
        os.replace(handle.name, path)
    except Exception:
        os.unlink(handle.name)
        raise
    logger.debug('Wrote %s', path)


def dumps_json(data):
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


def write_json(path, data):
    _atomic_write(path, dumps_json(data))


def write_text(path, text):
    _atomic_write(path, text)


def read_json(path):
    try:
        with open(path) as fd:
            return json.load(fd)
    except ValueError as error:
        raise ReportFormatError(path, 'Malformed JSON in %s: %s' % (
            path, error,
        ))


def _require(data, keys, what):
    if not isinstance(data, dict):
        raise ReportFormatError(data, '%s must be a JSON object' % what)
    missing = [key for key in keys if key not in data]
    if missing:
        raise ReportFormatError(
            data, '%s is missing %s' % (what, ', '.join(missing))
        )


def _parsing(what):
    """
    Turns the library errors raised while building a value from a document
    into :class:`ReportFormatError`.
    """
    def decorator(func):
        @functools.wraps(func)
        def wrapper(data, *args, **kwargs):
            try:
                return func(data, *args, **kwargs)
            except ReportFormatError:
                raise
            except (HDXException, TypeError, ValueError, KeyError) as error:
                raise ReportFormatError(
                    data, 'Invalid %s: %s' % (what, error)
                )
        return wrapper
    return decorator


# facets

def complex_to_dict(K):
    return {'facets': [list(simplex) for simplex in maximal_simplices(K)]}


@_parsing('facets document')
def complex_from_dict(data):
    _require(data, ['facets'], 'facets document')
    return build_complex(
        [tuple(facet) for facet in data['facets']],
        vertex_count=data.get('vertex_count'),
    )


def load_facets(path):
    return complex_from_dict(read_json(path))


def dump_facets(path, K):
    write_json(path, complex_to_dict(K))


# equivariant data

def gamma_to_dict(G):
    return {
        'generators': G.generator_count,
        'cells': dict(
            (
                str(l),
                [
                    [
                        {'w': list(vertex.word.letters), 'v': vertex.base}
                        for vertex in cell
                    ]
                    for cell in degree
                ],
            )
            for l, degree in enumerate(G.cells)
        ),
    }


@_parsing('equivariant datum')
def gamma_from_dict(data):
    _require(data, ['generators', 'cells'], 'equivariant datum')
    cells = data['cells']
    degrees = sorted(int(l) for l in cells)
    if degrees != list(range(len(degrees))):
        raise ReportFormatError(
            degrees, 'Cell degrees must be 0..n, got %s' % degrees
        )
    return GammaComplexData(
        data['generators'],
        [
            [
                [(vertex['w'], vertex['v']) for vertex in cell]
                for cell in cells[str(l)]
            ]
            for l in degrees
        ],
    )


def load_gamma(path):
    return gamma_from_dict(read_json(path))


def dump_gamma(path, G):
    write_json(path, gamma_to_dict(G))


# coset actions

def action_to_dict(act):
    return {
        'N': act.index,
        'perms': [list(perm) for perm in act.perms],
        'identity_coset': act.identity_coset,
        'label': act.label,
    }


@_parsing('coset action')
def action_from_dict(data):
    _require(data, ['N', 'perms'], 'coset action')
    return coset_action_from_perms(
        data['perms'],
        data['N'],
        identity_coset=data.get('identity_coset', 0),
        label=data.get('label'),
    )


def load_action(path):
    return action_from_dict(read_json(path))


def dump_action(path, act):
    write_json(path, action_to_dict(act))


# group ring

def element_to_list(a):
    return [
        {'coeff': exact_to_str(coeff), 'word': list(word.letters)}
        for word, coeff in a.items()
    ]


@_parsing('group ring element')
def element_from_list(data):
    return GroupRingElement(
        (term['word'], Fraction(term['coeff'])) for term in data
    )


def matrix_to_list(A):
    return [[element_to_list(entry) for entry in row] for row in A.entries]


@_parsing('group ring matrix')
def matrix_from_list(data, cols=None):
    return GroupRingMatrix(
        [[element_from_list(entry) for entry in row] for row in data],
        rows=len(data),
        cols=cols,
    )


# reports

def spectrum_report_to_dict(report):
    return {
        'degree': report.degree,
        'eigenvalues': _round_all(report.eigenvalues),
        'zero_tol': report.zero_tol,
        'betti_exact': report.betti_exact,
        'gap_restricted': round_float(report.gap_restricted),
        'first_nonzero_upper': round_float(report.first_nonzero_upper),
        'first_nonzero_lower': round_float(report.first_nonzero_lower),
        'essential_gap': round_float(report.essential_gap),
        'diagnostics': list(report.diagnostics),
    }


@_parsing('spectrum report')
def spectrum_report_from_dict(data):
    _require(data, ['degree', 'eigenvalues', 'zero_tol', 'betti_exact'],
             'spectrum report')
    return SpectrumReport(
        degree=data['degree'],
        eigenvalues=tuple(data['eigenvalues']),
        zero_tol=data['zero_tol'],
        betti_exact=data['betti_exact'],
        gap_restricted=data.get('gap_restricted'),
        first_nonzero_upper=data.get('first_nonzero_upper'),
        first_nonzero_lower=data.get('first_nonzero_lower'),
        essential_gap=data.get('essential_gap'),
        diagnostics=tuple(data.get('diagnostics', ())),
    )


def exact_report_to_dict(report):
    """
    :class:`hdx.covers.ShapiroReport` and :class:`hdx.covers.SymbolReport`
    """
    data = dataclasses.asdict(report)
    data['max_entry_diff'] = exact_to_str(report.max_entry_diff)
    if 'diagnostics' in data:
        data['diagnostics'] = list(data['diagnostics'])
    return data


def _summary_to_dict(summary):
    return {
        'degree': summary.degree,
        'lambda_plus': round_float(summary.lambda_plus),
        'lambda_minus': round_float(summary.lambda_minus),
        'gap_restricted': round_float(summary.gap_restricted),
        'betti_exact': summary.betti_exact,
        'max_vertex_degree': summary.max_vertex_degree,
        'upper_spectrum': _round_all(summary.upper_spectrum),
        'lower_spectrum': _round_all(summary.lower_spectrum),
    }


def _summary_from_dict(data):
    return DegreeSummary(
        degree=data['degree'],
        lambda_plus=data['lambda_plus'],
        lambda_minus=data['lambda_minus'],
        gap_restricted=data['gap_restricted'],
        betti_exact=data['betti_exact'],
        max_vertex_degree=data['max_vertex_degree'],
        upper_spectrum=tuple(data['upper_spectrum']),
        lower_spectrum=tuple(data['lower_spectrum']),
    )


def member_to_dict(member):
    return {
        'label': member.label,
        'N': member.index,
        'vertices': member.vertex_count,
        'n': member.n,
        'zero_tol': member.zero_tol,
        'degrees': [_summary_to_dict(summary) for summary in member.degrees],
        'degree_bounded': member.degree_bounded,
        'diagnostics': list(member.diagnostics),
    }


def _member_from_dict(data):
    return MemberReport(
        label=data['label'],
        index=data['N'],
        vertex_count=data['vertices'],
        n=data['n'],
        zero_tol=data['zero_tol'],
        degrees=tuple(
            _summary_from_dict(summary) for summary in data['degrees']
        ),
        degree_bounded=data['degree_bounded'],
        diagnostics=tuple(data.get('diagnostics', ())),
    )


def family_report_to_dict(report):
    return {
        'n': report.n,
        'epsilon_threshold': report.epsilon_threshold,
        'zero_tol': report.zero_tol,
        'members': [member_to_dict(member) for member in report.members],
        'uniform_gap_plus': _round_all(report.uniform_gap_plus),
        'uniform_gap_minus': _round_all(report.uniform_gap_minus),
        'gap_witness': list(report.gap_witness),
        'betti_vanishing': list(report.betti_vanishing),
        'degree_bounded': report.degree_bounded,
        'verdict': {
            'expander_at_scale': report.verdict.expander_at_scale,
            'failing_members': list(report.verdict.failing_members),
            'failing_degrees': list(report.verdict.failing_degrees),
            'note': report.verdict.note,
        },
    }


@_parsing('family report')
def family_report_from_dict(data):
    _require(data, ['n', 'members', 'verdict'], 'family report')
    verdict = data['verdict']
    return FamilyReport(
        n=data['n'],
        epsilon_threshold=data['epsilon_threshold'],
        zero_tol=data['zero_tol'],
        members=tuple(_member_from_dict(member) for member in data['members']),
        uniform_gap_plus=tuple(data['uniform_gap_plus']),
        uniform_gap_minus=tuple(data['uniform_gap_minus']),
        gap_witness=tuple(data['gap_witness']),
        betti_vanishing=tuple(data['betti_vanishing']),
        degree_bounded=data['degree_bounded'],
        verdict=Verdict(
            expander_at_scale=verdict['expander_at_scale'],
            failing_members=tuple(verdict['failing_members']),
            failing_degrees=tuple(verdict['failing_degrees']),
            note=verdict['note'],
        ),
    )


# csv

FAMILY_CSV_FIELDS = [
    'label', 'N', 'vertices', 'degree', 'lambda_plus', 'lambda_minus',
    'gap_restricted', 'betti',
]


def _csv_text(header, rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def _csv_value(value):
    return '' if value is None else repr(round_float(value))


def family_csv(report):
    """
    One row per member and degree, for plotting gaps against the index.
    """
    rows = []
    for member in report.members:
        for summary in member.degrees:
            rows.append([
                member.label,
                member.index,
                member.vertex_count,
                summary.degree,
                _csv_value(summary.lambda_plus),
                _csv_value(summary.lambda_minus),
                _csv_value(summary.gap_restricted),
                summary.betti_exact,
            ])
    return _csv_text(FAMILY_CSV_FIELDS, rows)


def write_family_csv(path, report):
    write_text(path, family_csv(report))


def matrix_csv(matrix):
    """
    Nonzero entries of an integer or rational matrix as (row, col, value)
    triples, row major.
    """
    rows = []
    for row in range(matrix.shape[0]):
        for col in range(matrix.shape[1]):
            value = matrix[row, col]
            if value:
                rows.append([row, col, exact_to_str(value)])
    return _csv_text(['row', 'col', 'value'], rows)
