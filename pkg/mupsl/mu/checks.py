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
Exact verification of the mu identities on concrete groups
"""

from collections import OrderedDict
from fractions import Fraction

import mupsl
from mupsl.core.permutation import Permutation
from mupsl.core.group import (
    Subgroup, centralizer, conjugacy_class_reps, count_solutions_xn,
    is_normal, quotient_group, solutions_xn)
from mupsl.exceptions import NotNormal, NotRPrime
from mupsl.report import AuditReport, verdict_of
from mupsl.structure import auditable
from mupsl.util.package_utils import p_prime_part
from .singular import mu_decomposition, mu_r, mu_r_or_zero


def _inputs(**kwargs):
    return OrderedDict((k, str(v) if hasattr(v, 'order') else v)
                       for k, v in kwargs.items())


def _require_normal(G, N):
    if not is_normal(G, N):
        raise NotNormal('{} is not normal in {}'.format(N, G))


@auditable
def verify_centralizer_identity(G, r):
    """
    Checks that mu_r(G) is the sum of ``1 - mu_r(C(x))`` over classes

    The sum runs over one representative `x` of every conjugacy class of
    nontrivial `r`-elements.

    Parameters
    ----------
    G : :class:`PermGroup`
        Group within the enumeration cap
    r : int
        Prime

    Returns
    -------
    report : :class:`AuditReport`
        ``lhs`` is mu_r(G), ``rhs`` the class sum

    Examples
    --------

    >>> a5 = mupsl.catalog.get_group('A5')
    >>> r = mupsl.verify_centralizer_identity(a5, 5)
    >>> r.lhs, r.rhs
    (Fraction(2, 5), Fraction(2, 5))

    """
    lhs = mu_r_or_zero(G, r)
    terms = []
    for x in conjugacy_class_reps(G, filter_prime=r):
        c = centralizer(G, x)
        terms.append(1 - mu_r_or_zero(c, r))
    rhs = sum(terms, Fraction(0))
    return AuditReport(
        'centralizer_identity/{}/r={}'.format(G, r),
        inputs=_inputs(group=G, r=r), lhs=lhs, rhs=rhs,
        verdict=verdict_of(lhs == rhs),
        source='mu_r(G) = sum over r-element classes of (1 - mu_r(C(x)))',
        details=OrderedDict([('classes', len(terms)), ('terms', terms)]))


@auditable
def verify_quotient_inequality(G, N, r):
    """
    Checks ``mu_r(G) >= mu_r(G/N) + mu_r(N)/|G:N|`` for a normal subgroup

    mu_r of a group whose order is prime to `r` counts as 0.

    Examples
    --------

    >>> s3 = mupsl.catalog.get_group('S3')
    >>> a3 = mupsl.derived_subgroup(s3)
    >>> mupsl.verify_quotient_inequality(s3, a3, 3).details['equality']
    True

    """
    _require_normal(G, N)
    Q = quotient_group(G, N)
    index = G.order() // N.order()
    lhs = mu_r_or_zero(G, r)
    mu_q = mu_r_or_zero(Q, r)
    mu_n = mu_r_or_zero(N, r)
    rhs = mu_q + mu_n / index
    return AuditReport(
        'quotient_inequality/{}/{}/r={}'.format(G, N, r),
        inputs=_inputs(group=G, normal=N, r=r),
        lhs=lhs, rhs=rhs, verdict=verdict_of(lhs >= rhs),
        source='mu_r(G) >= mu_r(G/N) + mu_r(N)/|G:N|',
        details=OrderedDict([('mu_quotient', mu_q), ('mu_normal', mu_n),
                             ('index', index), ('equality', lhs == rhs)]))


@auditable
def verify_oprime_reduction(G, N, r):
    """
    Checks that factoring out a normal r'-subgroup leaves mu_r unchanged

    Raises
    ------
    NotNormal
        When `N` is not normal in `G`
    NotRPrime
        When `r` divides the order of `N`

    """
    _require_normal(G, N)
    if N.order() % r == 0:
        raise NotRPrime('{} divides |{}| = {}'.format(r, N, N.order()))
    Q = quotient_group(G, N)
    lhs = mu_r_or_zero(G, r)
    rhs = mu_r_or_zero(Q, r)
    return AuditReport(
        'oprime_reduction/{}/{}/r={}'.format(G, N, r),
        inputs=_inputs(group=G, normal=N, r=r),
        lhs=lhs, rhs=rhs, verdict=verdict_of(lhs == rhs),
        source="mu_r(G) = mu_r(G/N) for a normal r'-subgroup N")


@auditable
def check_coprime_split(G, N, r):
    """
    Checks that `r` divides at most one of ``|N|`` and ``|G/N|`` when t < r

    Here ``mu_r(G) = t/|R|``. When ``t >= r`` there is nothing to check and
    the verdict is vacuous.

    Examples
    --------

    >>> s3 = mupsl.catalog.get_group('S3')
    >>> a3 = mupsl.derived_subgroup(s3)
    >>> mupsl.check_coprime_split(s3, a3, 3).verdict
    'pass'

    """
    _require_normal(G, N)
    decomposition = mu_decomposition(G, r)
    index = G.order() // N.order()
    in_normal = N.order() % r == 0
    in_quotient = index % r == 0
    details = OrderedDict([('t', decomposition.t),
                           ('sylow_order', decomposition.sylow_order)])
    if decomposition.t >= r:
        verdict = mupsl.VACUOUS
    else:
        verdict = verdict_of(not (in_normal and in_quotient))
    return AuditReport(
        'coprime_split/{}/{}/r={}'.format(G, N, r),
        inputs=_inputs(group=G, normal=N, r=r),
        lhs=in_normal, rhs=in_quotient, verdict=verdict,
        source='t < r implies r does not divide both |N| and |G/N|',
        details=details)


@auditable
def verify_solution_closure(G, n):
    """
    Checks that exactly `n` solutions of ``x**n == 1`` form a subgroup

    Applies when `n` divides the group order and the equation has exactly
    `n` solutions; otherwise the verdict is vacuous.

    Examples
    --------

    >>> s3 = mupsl.catalog.get_group('S3')
    >>> mupsl.verify_solution_closure(s3, 3).verdict
    'pass'

    """
    count = count_solutions_xn(G, n)
    applies = G.order() % n == 0 and count == n
    details = OrderedDict([('solutions', count)])
    if not applies:
        return AuditReport(
            'solution_closure/{}/n={}'.format(G, n),
            inputs=_inputs(group=G, n=n), lhs=count,
            rhs=n, verdict=mupsl.VACUOUS,
            source='n solutions of x^n = 1 form a subgroup', details=details)
    elements = G.element_array()
    sols = [Permutation(elements[i], check=False)
            for i in solutions_xn(G, n)]
    generated = Subgroup(G, sols).order()
    details['generated_order'] = generated
    return AuditReport(
        'solution_closure/{}/n={}'.format(G, n),
        inputs=_inputs(group=G, n=n), lhs=count, rhs=n,
        verdict=verdict_of(generated == count),
        source='n solutions of x^n = 1 form a subgroup', details=details)


@auditable
def verify_regular_count_identity(G, r):
    """
    Checks ``mu_r(G) = 1 - #{x : x**m == 1}/|G|`` with m the r'-part of |G|

    Examples
    --------

    >>> mupsl.verify_regular_count_identity(
    ...     mupsl.catalog.get_group('A5'), 2).rhs
    Fraction(1, 4)

    """
    m = p_prime_part(G.order(), r)
    lhs = mu_r(G, r)
    regular = count_solutions_xn(G, m)
    rhs = 1 - Fraction(regular, G.order())
    return AuditReport(
        'regular_count_identity/{}/r={}'.format(G, r),
        inputs=_inputs(group=G, r=r), lhs=lhs,
        rhs=rhs, verdict=verdict_of(lhs == rhs),
        source="mu_r(G) = 1 - #{x : x^(|G|_r') = 1}/|G|",
        details=OrderedDict([('r_regular', regular), ('exponent', m)]))
