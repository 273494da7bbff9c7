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
Named audit selections used by the command line front end
"""

from collections import OrderedDict

import mupsl
from mupsl.catalog import get_group, normal_subgroup_table
from mupsl.lie.family import (
    CLASSICAL, EXCEPTIONAL, MIN_RANK, LieFamily, normalize_tag)
from mupsl.lie.orders import gln_bound_check, verify_order_closed_form
from mupsl.mu.checks import (
    check_coprime_split, verify_centralizer_identity,
    verify_quotient_inequality, verify_regular_count_identity,
    verify_solution_closure)
from mupsl.mu.singular import prime_spectrum
from mupsl.psl2.census import brute_vs_analytic, p_element_class_audit
from mupsl.psl2.group import psl2_group
from mupsl.session import AuditWorkspace
from mupsl.util.package_utils import is_prime_power, note
from .arithmetic import alternating_survivors, factorial_sweep, suzuki_audit
from .scanner import mu_omega_minus_exclusion, subcase_survivors, subcase_sweep
from .sporadic import atlas_constants_audit, sporadic_order_audit
from .theorem import check_perfect_below_half, mu_equality_theorem_check
from .walter import abelian_sylow2_audit


_THEOREM_QS = (4, 5, 7, 8, 9, 11, 13)
_NON_EXAMPLES = ('S5', 'S6', 'SL(2,5)', 'A6xZ2')

_SMALL_GROUPS = ('S3', 'S4', 'S5', 'A4', 'A5', 'D4', 'D5', 'D6', 'D9',
                 'Z6', 'Z12', 'SL(2,3)', 'SL(2,5)', 'Z2xZ2', 'S3xS3',
                 'A4xZ2', 'A5xZ2', 'PSL(2,7)', 'PSL(2,8)')

_EXCEPTIONAL_ORDERS = (('2B2', 8), ('2B2', 32), ('G2', 2), ('G2', 3),
                       ('G2', 4), ('G2', 5), ('3D4', 2), ('3D4', 3),
                       ('2G2', 27), ('F4', 2), ('2F4', 8), ('E6', 2),
                       ('2E6', 2), ('E7', 2), ('E8', 2))

_CLASS_AUDIT_Q_MAX = 32


def _factorial(options):
    factorial_sweep(options.get('n_max'))


def _alternating(options):
    alternating_survivors()


def _suzuki(options):
    suzuki_audit()


def _sylow2(options):
    abelian_sylow2_audit()


def _atlas(options):
    atlas_constants_audit()


def _sporadic(options):
    sporadic_order_audit()


def _omega_minus(options):
    mu_omega_minus_exclusion()


def _survivors(options):
    subcase_survivors(options.get('q0_range'))


def _classical_ranks(tag):
    # POmega(5) coincides with PSp(4)
    start = 3 if tag == 'POmega' else MIN_RANK[tag]
    return range(start, 7)


def _closed_form(options):
    q0_range = options.get('q0_range') or mupsl.config['q0_range']
    for tag in CLASSICAL:
        for n in _classical_ranks(tag):
            for q0 in q0_range:
                verify_order_closed_form(LieFamily(tag, n), q0)
    for tag, q0 in _EXCEPTIONAL_ORDERS:
        verify_order_closed_form(LieFamily(tag), q0)


def _cyclotomic_bound(options):
    q0_range = options.get('q0_range') or mupsl.config['q0_range']
    for q0 in q0_range:
        for m in range(1, 31):
            gln_bound_check(q0, m)


def _psl2_qs(q_max):
    return [q for q in range(4, q_max + 1) if is_prime_power(q)]


def _psl2(options):
    for q in _psl2_qs(mupsl.config['psl2_q_max']):
        brute_vs_analytic(q)


def _psl2_classes(options):
    q_max = min(_CLASS_AUDIT_Q_MAX, mupsl.config['psl2_q_max'])
    for q in _psl2_qs(q_max):
        p_element_class_audit(q)


def _mu_identities(options):
    for name in _SMALL_GROUPS:
        G = get_group(name)
        for r in prime_spectrum(G):
            verify_centralizer_identity(G, r)
            verify_regular_count_identity(G, r)
        for n in prime_spectrum(G):
            verify_solution_closure(G, n)
        check_perfect_below_half(G)
    for G, N, r in normal_subgroup_table():
        verify_quotient_inequality(G, N, r)
        check_coprime_split(G, N, r)


def _theorem(options):
    for q in _THEOREM_QS:
        expect = (4, 5) if q in (4, 5) else (q,)
        mu_equality_theorem_check(psl2_group(q), expect=expect)
    for name in _NON_EXAMPLES:
        mu_equality_theorem_check(get_group(name), expect=())


CHECKS = OrderedDict([
    ('factorial', _factorial),
    ('alternating', _alternating),
    ('suzuki', _suzuki),
    ('sylow2', _sylow2),
    ('atlas', _atlas),
    ('sporadic', _sporadic),
    ('omega-minus', _omega_minus),
    ('survivors', _survivors),
    ('closed-form', _closed_form),
    ('cyclotomic-bound', _cyclotomic_bound),
    ('psl2', _psl2),
    ('psl2-classes', _psl2_classes),
    ('mu-identities', _mu_identities),
    ('theorem', _theorem),
])

FAMILY_TAGS = CLASSICAL + EXCEPTIONAL

# Numbered case selectors, each naming the families it sweeps
CASE_FAMILIES = OrderedDict([
    ('4.1', ('PSL',)),
    ('4.2', ('PSU',)),
    ('4.3', ('PSp', 'POmega')),
    ('4.4', ('POmega+',)),
    ('4.5', ('POmega-',)),
    ('4.6', ('2B2',)),
    ('4.7', ('3D4',)),
    ('4.8', ('G2',)),
    ('4.9', ('2G2',)),
    ('4.10', ('F4',)),
    ('4.11', ('2F4',)),
    ('4.12', ('E6',)),
    ('4.13', ('2E6',)),
    ('4.14', ('E7',)),
    ('4.15', ('E8',)),
])

# Numbered selectors of named checks
NUMBERED_CHECKS = OrderedDict([
    ('2.11', 'factorial'),
])


def check_names():
    return list(CHECKS)


def family_tags(selector):
    """
    Returns the family tags selected by a tag, an alias or a case number

    Examples
    --------

    >>> mupsl.audit.family_tags('4.3')
    ('PSp', 'POmega')
    >>> mupsl.audit.family_tags('g2')
    ('G2',)

    """
    key = str(selector).strip()
    if key in CASE_FAMILIES:
        return CASE_FAMILIES[key]
    return (normalize_tag(key),)


def numbered_check(number):
    """
    Returns the check name behind a numbered selector

    Raises :class:`KeyError` for an unknown number.
    """
    key = str(number).strip()
    if key not in NUMBERED_CHECKS:
        raise KeyError('Unknown numbered check: {}'.format(number))
    return NUMBERED_CHECKS[key]


def run_checks(checks=(), subcases=(), n_max=None, q0_range=None,
               max_workers=None):
    """
    Runs the named checks and family sweeps in one workspace

    Parameters
    ----------
    checks : iterable
        Names from :func:`check_names`
    subcases : iterable
        Lie family tags, aliases or case numbers whose order comparisons
        are swept
    n_max : int, optional
        Upper end of the factorial sweep
    q0_range : iterable, optional
        Values of q0 for the Lie-type replays
    max_workers : int, optional
        Worker threads

    Returns
    -------
    reports : list of :class:`AuditReport`
        Sorted by check identifier

    Raises
    ------
    KeyError
        When a check name is unknown
    ConstraintViolation
        When a family tag is unknown

    """
    checks = list(OrderedDict.fromkeys(checks))
    subcases = list(OrderedDict.fromkeys(
        tag for selector in subcases for tag in family_tags(selector)))
    for name in checks:
        if name not in CHECKS:
            raise KeyError('Unknown check: {}'.format(name))
    if '2B2' in subcases and 'suzuki' in checks:
        # The Suzuki sweep already runs this audit
        checks.remove('suzuki')
    options = {'n_max': n_max, 'q0_range': q0_range}
    note('Running {} checks and {} family sweeps'.format(
        len(checks), len(subcases)), 3)
    with AuditWorkspace('audit', max_workers=max_workers) as w:
        for name in checks:
            CHECKS[name](options)
        for tag in subcases:
            subcase_sweep(tag, q0_range)
    return w.submit()


def run_all(n_max=None, q0_range=None, max_workers=None):
    """
    Runs every named check and every family sweep
    """
    return run_checks(check_names(), FAMILY_TAGS, n_max=n_max,
                      q0_range=q0_range, max_workers=max_workers)
