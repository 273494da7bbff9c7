#!/usr/bin/env python
# encoding: utf-8
#
# Copyright SAS Institute
#
#  Licensed under the Apache License, Version 2.0 (the License);
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

"""
Replays of the Lie-type cases

A Lie-type quotient ``L(q0)`` of a group with the mu-profile of
PSL(2,p^f) forces ``p^f <= Phi_m(q0)^e(m)`` for the cyclotomic factor that
holds the Sylow p-subgroup. The scanner lists the ``(n, m)`` that the
exponent inequality ``h + 1 < 2(m + 1)e(m)`` leaves open, and the order
comparison checks ``|L(q0)| > Phi_m(q0)^(3 e(m))`` for each of them.
"""

from collections import OrderedDict, namedtuple
from fractions import Fraction

import mupsl
from mupsl.exceptions import ConstraintViolation
from mupsl.lie.family import (
    CLASSICAL, EXCEPTIONAL, MIN_RANK, ODD_POWER_OF, LieFamily, normalize_tag)
from mupsl.lie.orders import cyclotomic_value, lie_order
from mupsl.lie.tables import cyclotomic_indices, e_L, exponent_h, max_index
from mupsl.psl2.census import mu_analytic
from mupsl.report import AuditReport, combine_verdicts, verdict_of
from mupsl.structure import auditable, set_container
from mupsl.util.package_utils import note


ScanBranch = namedtuple(
    'ScanBranch', ['label', 'bound', 'accepts', 'positive', 'ranks', 'low'])
ScanBranch.__doc__ = """
One branch of the exponent scan of a classical family

``bound`` is the coefficient C of the rank bound ``h(n) + 1 < C n``;
``accepts(n, m)`` selects the cyclotomic indices of the branch;
``positive`` drops pairs with a zero exponent; ``ranks`` fixes the ranks
instead of the bound; ``low`` marks the small-m branches that are reported
apart from the main solution list.
"""


def _branch(label, bound, accepts, positive=True, ranks=None, low=False):
    return ScanBranch(label, Fraction(bound), accepts, positive, ranks, low)


_SYMPLECTIC = [_branch('m>2', 5, lambda n, m: m > 2)]

_BRANCHES = {
    'PSL': [
        _branch('m>1', 3, lambda n, m: m > 1),
        _branch('m=1', 3, lambda n, m: m == 1, low=True)],
    'PSU': [
        _branch('m!=2 mod 4', 3, lambda n, m: m % 4 != 2),
        _branch('2<m=2 mod 4', Fraction(14, 3),
                lambda n, m: m > 2 and m % 4 == 2),
        _branch('m=2', 3, lambda n, m: m == 2, ranks=(3,), low=True)],
    'PSp': _SYMPLECTIC,
    'POmega': _SYMPLECTIC,
    'POmega+': [
        _branch('m>2, m|n or m!|2n', 5,
                lambda n, m: m > 2 and (n % m == 0 or (2 * n) % m != 0)),
        _branch('m>2, m!|n, m|2n', Fraction(16, 3),
                lambda n, m: m > 2 and n % m != 0 and (2 * n) % m == 0,
                positive=False)],
    'POmega-': [
        _branch('m>2, m|n', 5, lambda n, m: m > 2 and n % m == 0,
                positive=False),
        _branch('m>2, m!|n', 5, lambda n, m: m > 2 and n % m != 0),
        _branch('m<=2', 5, lambda n, m: m <= 2, positive=False, low=True)],
}

# POmega(5) coincides with PSp(4), the odd orthogonal scan starts at rank 3
_SCAN_MIN_RANK = dict(MIN_RANK, POmega=3)

# Families whose Sylow bound uses the rank instead of e(m) for m <= 2
_RANK_EXPONENT_FAMILIES = ('PSp', 'POmega', 'POmega+', 'POmega-')

_TWISTED_Q0 = {'2B2': (8, 32), '2G2': (27, 243), '2F4': (8, 32)}

# (tag, n, q0) of the groups in the families that are not simple
_NOT_SIMPLE = {('PSL', 2, 2), ('PSL', 2, 3), ('PSU', 3, 2), ('PSp', 2, 2),
               ('POmega', 2, 2), ('G2', None, 2), ('2B2', None, 2),
               ('2G2', None, 3), ('2F4', None, 2)}

CONTRADICTION = 'contradiction'
SKIPPED = 'not simple'


def _ranks(tag, branch):
    if branch.ranks is not None:
        return list(branch.ranks)
    ranks = []
    n = _SCAN_MIN_RANK[tag]
    ceiling = int(2 * branch.bound) + 4
    while n <= ceiling:
        h = exponent_h(LieFamily(tag, n))
        if h + 1 < branch.bound * n:
            ranks.append(n)
        n += 1
    return ranks


def _branch_pairs(tag, branch):
    pairs = []
    for n in _ranks(tag, branch):
        family = LieFamily(tag, n)
        for m in range(1, max_index(family) + 1):
            if not branch.accepts(n, m):
                continue
            if branch.positive and e_L(family, m) == 0:
                continue
            pairs.append((n, m))
    return pairs


def _exceptional_scan(tag):
    family = LieFamily(tag)
    h = exponent_h(family)
    qualifying = [m for m in cyclotomic_indices(family)
                  if h + 1 < 2 * (m + 1) * e_L(family, m)]
    return OrderedDict([
        ('m>=2', [m for m in qualifying if m >= 2]),
        ('m=1', [m for m in qualifying if m == 1])])


def scan_branches(family_tag):
    """
    Returns the exponent scan of a family, branch by branch

    Parameters
    ----------
    family_tag : string
        Lie family tag, such as ``'PSU'`` or ``'G2'``

    Returns
    -------
    branches : OrderedDict
        Branch label to the sorted ``(n, m)`` pairs of a classical family,
        or to the sorted indices ``m`` of an exceptional family

    Notes
    -----

    A classical branch scans every rank allowed by its bound
    ``h(n) + 1 < C n`` and keeps the indices of the branch; the exact
    inequality is left to the order comparison. Exceptional families test
    ``h + 1 < 2(m + 1)e(m)`` on every row of their exponent table.

    """
    tag = normalize_tag(family_tag)
    if tag in EXCEPTIONAL:
        return _exceptional_scan(tag)
    return OrderedDict((b.label, sorted(_branch_pairs(tag, b)))
                       for b in _BRANCHES[tag])


def _is_low(tag, label):
    if tag in EXCEPTIONAL:
        return label == 'm=1'
    return any(b.low for b in _BRANCHES[tag] if b.label == label)


def exponent_inequality_solutions(family_tag):
    """
    Returns the parameters left open by the exponent inequality

    Parameters
    ----------
    family_tag : string
        Lie family tag

    Returns
    -------
    solutions : list
        Sorted ``(n, m)`` pairs for a classical family, sorted indices `m`
        with ``m >= 2`` for an exceptional family. The small-m branches are
        available from :func:`scan_branches`.

    Examples
    --------

    >>> len(mupsl.exponent_inequality_solutions('PSL'))
    15
    >>> mupsl.exponent_inequality_solutions('3D4')
    [3, 6, 12]
    >>> mupsl.exponent_inequality_solutions('E6')
    []

    """
    tag = normalize_tag(family_tag)
    found = set()
    for label, solutions in scan_branches(tag).items():
        if not _is_low(tag, label):
            found.update(solutions)
    return sorted(found)


@auditable
def exponent_inequality_report(family_tag):
    """
    Reports the exponent scan of a family

    The verdict is ``vacuous`` when nothing is left open.
    """
    tag = normalize_tag(family_tag)
    solutions = exponent_inequality_solutions(tag)
    branches = scan_branches(tag)
    return AuditReport(
        'exponent_inequality/{}'.format(tag),
        inputs=OrderedDict([('family', tag)]),
        lhs=solutions, rhs=None,
        verdict=mupsl.PASS if solutions else mupsl.VACUOUS,
        source='h + 1 < 2(m + 1) e(m)',
        details=OrderedDict([('branches', branches)]))


def _family_of(family, n):
    if isinstance(family, LieFamily):
        return family
    tag = normalize_tag(family)
    if tag in CLASSICAL:
        return LieFamily(tag, n)
    return LieFamily(tag)


def bound_exponent(family, m):
    """
    Returns the exponent of Phi_m(q0) in the bound on p^f

    This is e(m), except for m <= 2 in the symplectic and orthogonal
    families, where the bound ``p^f <= (q0 +/- 1)_p^n`` uses the rank.
    """
    if family.tag in _RANK_EXPONENT_FAMILIES and m <= 2:
        return family.n
    return e_L(family, m)


def _survivor_label(family, m, q0):
    tag, n = family.tag, family.n
    if tag == 'PSL' and n == 2:
        return 'self-case PSL(2,{})'.format(q0)
    if tag == 'PSL' and (n, m, q0) == (3, 3, 2):
        return 'PSL(3,2) = PSL(2,7)'
    if tag == 'POmega-' and n == 2:
        if (m, q0) == (2, 2):
            return 'mu_3 exclusion'
        return 'self-case PSL(2,{})'.format(q0 * q0)
    return None


def _q0_values(family, q0_range):
    if q0_range is None:
        if family.tag in _TWISTED_Q0:
            return list(_TWISTED_Q0[family.tag])
        return list(mupsl.config['q0_range'])
    if family.tag in ODD_POWER_OF:
        valid = []
        for q0 in q0_range:
            try:
                family.check_q0(q0)
            except ConstraintViolation:
                continue
            valid.append(q0)
        return valid or list(_TWISTED_Q0[family.tag])
    return list(q0_range)


def _comparison_row(family, m, e, q0):
    row = OrderedDict([('q0', q0)])
    if (family.tag, family.n, q0) in _NOT_SIMPLE:
        row['outcome'] = SKIPPED
        return row, mupsl.VACUOUS
    order = lie_order(family, q0)
    base = cyclotomic_value(m, q0) ** e
    bound = base ** 3
    row['order'] = order
    row['sylow_bound'] = base
    row['psl2_bound'] = bound
    if order > bound:
        row['outcome'] = CONTRADICTION
        return row, mupsl.PASS
    label = _survivor_label(family, m, q0)
    if label is None:
        row['outcome'] = 'order within bound'
        return row, mupsl.FAIL
    row['outcome'] = label
    return row, mupsl.SURVIVOR


@auditable
def subcase_order_comparison(family, n, m, q0_range=None):
    """
    Compares the order of ``L(q0)`` with the bound on ``|PSL(2,p^f)|``

    Parameters
    ----------
    family : string or :class:`LieFamily`
        Lie family; a tag is combined with the rank `n`
    n : int or None
        Rank of a classical family, None for an exceptional family
    m : int
        Index of the cyclotomic factor holding the Sylow p-subgroup
    q0_range : iterable, optional
        Values of q0, ``mupsl.config['q0_range']`` by default; twisted
        families use their own odd powers

    Returns
    -------
    report : :class:`AuditReport`
        Per q0: ``U = Phi_m(q0)^e`` and ``B = U^3`` against ``|L(q0)|``.
        A q0 with ``|L(q0)| <= B`` is a survivor when it is one of the known
        coincidences, a failure otherwise. The verdict is ``vacuous`` when
        the exponent is zero.

    Raises
    ------
    ConstraintViolation
        When the family parameters or q0 values are invalid

    Examples
    --------

    >>> r = mupsl.subcase_order_comparison('PSL', 3, 3, [2])
    >>> r.verdict
    'survivor'
    >>> mupsl.subcase_order_comparison('G2', None, 2).verdict
    'pass'

    """
    family = _family_of(family, n)
    e = bound_exponent(family, m)
    label = family.tag if family.n is None else str(family)
    check = 'subcase/{}/m={:02d}'.format(label, m)
    inputs = OrderedDict([('family', str(family)), ('n', family.n),
                          ('m', m), ('exponent', e)])
    if e == 0:
        return AuditReport(
            check, inputs=inputs, lhs=OrderedDict(), rhs=OrderedDict(),
            verdict=mupsl.VACUOUS, source='Phi_m does not occur in |L(q0)|',
            details=OrderedDict([('q0', [])]))
    q0_values = _q0_values(family, q0_range)
    for q0 in q0_values:
        family.check_q0(q0)
    rows = []
    verdicts = []
    for q0 in q0_values:
        row, verdict = _comparison_row(family, m, e, q0)
        rows.append(row)
        verdicts.append(verdict)
    orders = OrderedDict((r['q0'], r['order']) for r in rows if 'order' in r)
    bounds = OrderedDict((r['q0'], r['psl2_bound'])
                         for r in rows if 'order' in r)
    return AuditReport(
        check, inputs=inputs, lhs=orders, rhs=bounds,
        verdict=combine_verdicts(verdicts),
        source='|L(q0)| > Phi_m(q0)^(3e) > |PSL(2,p^f)|',
        details=OrderedDict([('q0', rows)]))


def subcase_sweep(family_tag, q0_range=None):
    """
    Runs the order comparison over every scanned parameter of a family

    Returns the scan report followed by one comparison per ``(n, m)``
    (or per `m` for an exceptional family). The Suzuki family is settled by
    :func:`suzuki_audit` instead of an order comparison.

    Examples
    --------

    >>> reports = mupsl.subcase_sweep('E8')
    >>> [r.verdict for r in reports]
    ['vacuous']

    """
    from .arithmetic import suzuki_audit

    tag = normalize_tag(family_tag)
    reports = [exponent_inequality_report(tag)]
    if tag == '2B2':
        reports.append(suzuki_audit())
        return reports
    branches = scan_branches(tag)
    note('Sweeping {} over {} branches'.format(tag, len(branches)), 4)
    if tag in EXCEPTIONAL:
        indices = sorted(set(m for ms in branches.values() for m in ms))
        for m in indices:
            reports.append(subcase_order_comparison(tag, None, m, q0_range))
        return reports
    pairs = sorted(set(p for ps in branches.values() for p in ps))
    for n, m in pairs:
        reports.append(subcase_order_comparison(tag, n, m, q0_range))
    return reports


@auditable
def subcase_survivors(q0_range=None):
    """
    Collects the survivors of the order comparisons of every family

    The verdict is ``fail`` when any comparison fails, ``survivor`` when
    the only open cases are the known coincidences.
    """
    with set_container(None):
        survivors = []
        verdicts = []
        for tag in CLASSICAL + EXCEPTIONAL:
            for report in subcase_sweep(tag, q0_range):
                verdicts.append(report.verdict)
                if not report.check.startswith('subcase/'):
                    continue
                for row in report.details['q0']:
                    if row['outcome'] in (CONTRADICTION, SKIPPED):
                        continue
                    survivors.append(OrderedDict([
                        ('family', report.inputs['family']),
                        ('n', report.inputs['n']),
                        ('m', report.inputs['m']),
                        ('q0', row['q0']),
                        ('outcome', row['outcome'])]))
    return AuditReport(
        'subcase_survivors',
        inputs=OrderedDict([('q0_range', q0_range)]),
        lhs=len(survivors), rhs=None,
        verdict=combine_verdicts(verdicts),
        source='every open Lie-type case is a known coincidence',
        details=OrderedDict([('survivors', survivors)]))


@auditable
def mu_omega_minus_exclusion():
    """
    Compares mu_3 of PSL(2,5) with mu_3 of PSL(2,9)

    A quotient isomorphic to PSL(2,5) of a group with the profile of
    PSL(2,9) would need ``mu_3(PSL(2,5)) <= mu_3(PSL(2,9))``.

    Examples
    --------

    >>> r = mupsl.mu_omega_minus_exclusion()
    >>> r.lhs, r.rhs
    (Fraction(1, 3), Fraction(2, 9))

    """
    quotient = mu_analytic(5, 3)
    group = mu_analytic(9, 3)
    return AuditReport(
        'omega_minus_mu3_exclusion',
        inputs=OrderedDict([('quotient', 'PSL(2,5)'), ('group', 'PSL(2,9)')]),
        lhs=quotient, rhs=group, verdict=verdict_of(quotient > group),
        source='mu_3 of a quotient cannot exceed mu_3 of the group')
