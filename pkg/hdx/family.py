"""
Spectral reports for the quotients of an equivariant datum by a family of
finite index subgroups, and the finite scale verdict on whether they form a
family of spectral expanders.
"""
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import hodge
from .config import TOLERANCES, zero_tol_for
from .covers import (
    covering_degree_check,
    quotient_complex,
    twisted_complex,
)
from .errors import EmptyFamily, InvalidParameter, SpectralMismatch
from .simplicial import vertex_degrees

logger = logging.getLogger(__name__)

UniformGap = namedtuple('UniformGap', ['value', 'witness', 'flagged'])
ReducedCheck = namedtuple('ReducedCheck', ['ok', 'minimum', 'zero_tol'])


@dataclass(frozen=True)
class DegreeSummary(object):
    degree: int
    lambda_plus: object
    lambda_minus: object
    gap_restricted: object
    betti_exact: int
    max_vertex_degree: int
    upper_spectrum: tuple = field(default_factory=tuple, repr=False)
    lower_spectrum: tuple = field(default_factory=tuple, repr=False)


@dataclass(frozen=True)
class MemberReport(object):
    label: str
    index: int
    vertex_count: int
    n: int
    zero_tol: float
    degrees: tuple
    degree_bounded: bool
    diagnostics: tuple = field(default_factory=tuple)
    complex: object = field(default=None, compare=False, repr=False)

    def at(self, l):
        return self.degrees[l]


@dataclass(frozen=True)
class Verdict(object):
    expander_at_scale: bool
    failing_members: tuple
    failing_degrees: tuple
    note: str


@dataclass(frozen=True)
class FamilyReport(object):
    n: int
    epsilon_threshold: float
    zero_tol: float
    members: tuple
    uniform_gap_plus: tuple
    uniform_gap_minus: tuple
    gap_witness: tuple
    betti_vanishing: tuple
    degree_bounded: bool
    verdict: Verdict


def _max_difference(first, second):
    if len(first) != len(second):
        return float('inf')
    if not len(first):
        return 0.0
    return float(np.max(np.abs(np.asarray(first) - np.asarray(second))))


def analyze_member(G, act, n=None, zero_tol=None):
    """
    Spectral data of the quotient of the datum by one subgroup, degrees 0
    to n.

    The upper Laplacian spectra of the quotient are checked against those of
    the twisted complex of the action.

    :param G: :class:`hdx.covers.GammaComplexData`
    :param act: :class:`hdx.covers.CosetAction`
    :param n: truncation degree, the one of the datum by default
    :param zero_tol: kernel threshold, by default derived from the largest
        eigenvalue of the member
    :raises SpectralMismatch: if quotient and twisted spectra disagree
    """
    n = G.n if n is None else n
    G.check_degree(n)
    logger.debug('Analyzing %r up to degree %d', act, n)
    K = quotient_complex(G, act, n=n)
    M = hodge.cochain_complex(K, top=n)
    twisted = twisted_complex(G, act, n=n)

    upper = [hodge.spectrum(hodge.upper_laplacian(M, l)) for l in range(n + 1)]
    lower = [hodge.spectrum(hodge.lower_laplacian(M, l)) for l in range(n + 1)]
    lambda_max = max(
        [float(values[-1]) for values in upper + lower if values.size] or
        [0.0]
    )
    if zero_tol is None:
        zero_tol = zero_tol_for(lambda_max)

    transfer_tol = TOLERANCES.get('transfer') * max(1.0, lambda_max)
    diagnostics = []
    summaries = []
    for l in range(n + 1):
        twisted_upper = hodge.spectrum(hodge.upper_laplacian(twisted, l))
        diff = _max_difference(upper[l], twisted_upper)
        if diff > transfer_tol:
            raise SpectralMismatch(
                (act, l),
                'Quotient and twisted upper spectra of %r differ by %g at '
                'degree %d' % (act, diff, l),
            )
        gap = hodge.spectral_gap_upper(M, l, zero_tol=zero_tol)
        betti = hodge.betti_exact(M, l)
        kernel = int(np.sum(
            hodge.spectrum(hodge.full_laplacian(M, l)) <= zero_tol
        ))
        if kernel != betti:
            msg = (
                '%s: degree %d has %d harmonic eigenvalues but betti number '
                '%d' % (act.label, l, kernel, betti)
            )
            logger.error(msg)
            diagnostics.append(msg)
        summaries.append(DegreeSummary(
            degree=l,
            lambda_plus=gap.first_nonzero,
            lambda_minus=hodge.essential_gap(lower[l], zero_tol),
            gap_restricted=gap.restricted_min,
            betti_exact=betti,
            max_vertex_degree=max(vertex_degrees(K, l) or [0]),
            upper_spectrum=tuple(float(x) for x in upper[l]),
            lower_spectrum=tuple(float(x) for x in lower[l]),
        ))

    covering = covering_degree_check(G, act, n=n)
    for msg in covering:
        logger.warning('%s: %s', act.label, msg)
    return MemberReport(
        label=act.label,
        index=act.index,
        vertex_count=K.vertex_count,
        n=n,
        zero_tol=float(zero_tol),
        degrees=tuple(summaries),
        degree_bounded=not covering,
        diagnostics=tuple(diagnostics + covering),
        complex=M,
    )


def uniform_gap_check(spectra, zero_tol, labels=None):
    """
    Smallest essential gap over a finite family of spectra, with the member
    attaining it.

    The value is also the essential gap of the union of the spectra, which
    is checked.

    :param spectra: one eigenvalue sequence per member
    :param zero_tol: kernel threshold shared by all members
    :param labels: member names, positions by default
    :return: :class:`UniformGap`, ``flagged`` being True when every
        spectrum is zero
    """
    spectra = list(spectra)
    if not spectra:
        raise EmptyFamily(spectra, 'No spectra to compare')
    labels = list(range(len(spectra))) if labels is None else list(labels)
    value = witness = None
    for label, spec in zip(labels, spectra):
        gap = hodge.essential_gap(spec, zero_tol)
        if gap is not None and (value is None or gap < value):
            value, witness = gap, label

    merged = hodge.essential_gap(hodge.sigma_union(spectra), zero_tol)
    if merged != value:
        raise SpectralMismatch(
            (value, merged),
            'Uniform gap %s differs from the gap %s of the union' % (
                value, merged,
            ),
        )
    if value is None:
        logger.debug('All %d spectra vanish, no uniform gap', len(spectra))
    return UniformGap(value=value, witness=witness, flagged=value is None)


def reduced_check(member, l):
    """
    Checks that the upper Laplacian of a member is invertible on the image
    of the adjoint of d_l, as it must be in finite dimensions. A False
    result signals a tolerance inconsistency.
    """
    if member.complex is None:
        raise InvalidParameter(
            member,
            '%s carries no cochain complex, reduced checks need a freshly '
            'analyzed member' % member.label,
        )
    minimum = hodge.reduced_laplacian_min(member.complex, l)
    if minimum is None:
        return ReducedCheck(ok=True, minimum=None, zero_tol=member.zero_tol)
    ok = minimum > member.zero_tol
    if not ok:
        logger.error(
            '%s: reduced upper Laplacian at degree %d has eigenvalue %g',
            member.label, l, minimum,
        )
    return ReducedCheck(ok=ok, minimum=minimum, zero_tol=member.zero_tol)


def _verdict(members, n, epsilon_threshold, gap_plus, betti_vanishing,
             degree_bounded):
    failing_members = []
    failing_degrees = set()
    top = n - 1
    for member in members:
        fails = not member.degree_bounded
        for l in range(1, n):
            if member.at(l).betti_exact != 0:
                failing_degrees.add(l)
                fails = True
        lam = member.at(top).lambda_plus
        if lam is None or lam < epsilon_threshold:
            failing_degrees.add(top)
            fails = True
        if fails:
            failing_members.append(member.label)

    expander = (
        degree_bounded and
        all(betti_vanishing[l] for l in range(1, n)) and
        gap_plus[top] is not None and
        gap_plus[top] >= epsilon_threshold
    )
    indices = [member.index for member in members]
    note = (
        'verdict at scale for %d members of index %d..%d, threshold %g at '
        'degree %d' % (
            len(members), min(indices), max(indices), epsilon_threshold, top,
        )
    )
    if len(members) == 1:
        note += '; a single member carries no asymptotic meaning'
    return Verdict(
        expander_at_scale=expander,
        failing_members=tuple(failing_members),
        failing_degrees=tuple(sorted(failing_degrees)),
        note=note,
    )


def family_report(G, actions, n, epsilon_threshold, zero_tol=None, jobs=1):
    """
    Analyzes every quotient and aggregates their gaps per degree.

    The family is an expander family at this scale when the Betti numbers
    of all members vanish in degrees 1..n-1, the vertex degrees are those of
    the base quotient and the uniform gap of the upper Laplacians at degree
    n-1 reaches ``epsilon_threshold``.

    :param G: :class:`hdx.covers.GammaComplexData`
    :param actions: coset actions, one per member, aggregated in this order
    :param n: dimension of the complexes to analyze, at least 1
    :param epsilon_threshold: gap the family has to reach
    :param zero_tol: kernel threshold, derived per member if None
    :param jobs: number of members analyzed concurrently
    """
    actions = list(actions)
    if not actions:
        raise EmptyFamily(actions, 'The family has no members')
    if n < 1:
        raise InvalidParameter(n, 'n must be at least 1, got %d' % n)
    G.check_degree(n)
    if len(actions) == 1:
        logger.warning('Family with a single member %s', actions[0].label)

    def _analyze(act):
        return analyze_member(G, act, n=n, zero_tol=zero_tol)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            members = list(executor.map(_analyze, actions))
    else:
        members = [_analyze(act) for act in actions]

    family_tol = (
        zero_tol if zero_tol is not None
        else max(member.zero_tol for member in members)
    )
    labels = [member.label for member in members]
    gap_plus, gap_minus, witnesses, betti_vanishing = [], [], [], []
    for l in range(n + 1):
        plus = uniform_gap_check(
            [member.at(l).upper_spectrum for member in members],
            family_tol,
            labels=labels,
        )
        minus = uniform_gap_check(
            [member.at(l).lower_spectrum for member in members],
            family_tol,
            labels=labels,
        )
        gap_plus.append(plus.value)
        gap_minus.append(minus.value)
        witnesses.append(plus.witness)
        betti_vanishing.append(
            all(member.at(l).betti_exact == 0 for member in members)
        )
    degree_bounded = all(member.degree_bounded for member in members)

    verdict = _verdict(
        members, n, epsilon_threshold, gap_plus, betti_vanishing,
        degree_bounded,
    )
    logger.debug('Family verdict: %s', verdict)
    return FamilyReport(
        n=n,
        epsilon_threshold=float(epsilon_threshold),
        zero_tol=float(family_tol),
        members=tuple(members),
        uniform_gap_plus=tuple(gap_plus),
        uniform_gap_minus=tuple(gap_minus),
        gap_witness=tuple(witnesses),
        betti_vanishing=tuple(betti_vanishing),
        degree_bounded=degree_bounded,
        verdict=verdict,
    )


def lower_gap_transfer(report, l):
    """
    Whether the uniform lower gap at degree l+1 equals the uniform upper gap
    at degree l, both being built from d_l.
    """
    if not 0 <= l < report.n:
        raise InvalidParameter(l, 'No degree %d transfer for n=%d' % (
            l, report.n,
        ))
    upper = report.uniform_gap_plus[l]
    lower = report.uniform_gap_minus[l + 1]
    if upper is None or lower is None:
        return upper is None and lower is None
    return abs(upper - lower) <= TOLERANCES.get('transfer') * max(
        1.0, abs(upper),
    )


def top_cohomology_check(report):
    """
    Per member, the restricted gap at degree n-1 is positive exactly when
    the degree n-1 cohomology vanishes.
    """
    top = report.n - 1
    ok = True
    for member in report.members:
        summary = member.at(top)
        positive = (
            summary.gap_restricted is None or
            summary.gap_restricted > member.zero_tol
        )
        if positive != (summary.betti_exact == 0):
            logger.error(
                '%s: restricted gap %s at degree %d but betti number %d',
                member.label, summary.gap_restricted, top,
                summary.betti_exact,
            )
            ok = False
    return ok
