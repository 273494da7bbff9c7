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
Element-order census and mu-profile of PSL(2,q), analytic and enumerated
"""

from collections import OrderedDict
from fractions import Fraction
from math import gcd

from sympy import divisors, integer_nthroot, isprime, primefactors, totient

from mupsl.core.group import _order_histogram, conjugacy_class_reps
from mupsl.exceptions import PrimeNotInSpectrum
from mupsl.mu.profile import MuProfile, profile_from_value_set
from mupsl.mu.singular import mu_profile
from mupsl.report import AuditReport, verdict_of
from mupsl.structure import auditable
from mupsl.util.package_utils import (
    is_prime_power, p_part, require_prime_power)
from .group import psl2_group, psl2_order


CHARACTERISTIC = 'characteristic'
MINUS = 'minus'
PLUS = 'plus'


class Psl2Census:
    """
    Number of elements of each order in PSL(2,q)

    Parameters
    ----------
    q : int
        Prime power
    counts : dict
        Map from element order to the number of elements of that order

    Examples
    --------

    >>> c = mupsl.element_order_census_analytic(7)
    >>> dict(c.counts)
    {1: 1, 2: 21, 3: 56, 4: 42, 7: 48}
    >>> c.total()
    168

    """

    def __init__(self, q, counts):
        self.q = q
        self.counts = OrderedDict(
            (int(d), int(counts[d])) for d in sorted(counts))

    def total(self):
        return sum(self.counts.values())

    def singular_count(self, r):
        """Returns the number of elements whose order is divisible by `r`"""
        return sum(c for d, c in self.counts.items() if d % r == 0)

    def to_json(self):
        return OrderedDict((str(d), c) for d, c in self.counts.items())

    def __eq__(self, other):
        if not isinstance(other, Psl2Census):
            return NotImplemented
        return self.q == other.q and self.counts == other.counts

    def __repr__(self):
        return 'mupsl.Psl2Census(q={}, counts={})'.format(
            self.q, dict(self.counts))


def element_order_census_analytic(q):
    """
    Returns the element-order census of PSL(2,q) from the counting formulas

    Notes
    -----

    With ``g = gcd(2, q - 1)``: there are ``q^2 - 1`` elements of order `p`,
    and every divisor ``d > 1`` of ``(q - 1)/g`` is the order of
    ``q(q + 1)phi(d)/2`` elements, every divisor ``d > 1`` of
    ``(q + 1)/g`` the order of ``q(q - 1)phi(d)/2`` elements.

    """
    p, _ = require_prime_power(q)
    g = gcd(2, q - 1)
    counts = {1: 1, p: q * q - 1}
    for d in divisors((q - 1) // g)[1:]:
        counts[d] = q * (q + 1) * int(totient(d)) // 2
    for d in divisors((q + 1) // g)[1:]:
        counts[d] = q * (q - 1) * int(totient(d)) // 2
    return Psl2Census(q, counts)


def element_order_census(G, q=None):
    """
    Returns the element-order census of `G` by enumeration
    """
    return Psl2Census(q, _order_histogram(G))


def element_order_census_brute(q):
    return element_order_census(psl2_group(q), q)


def mu_branch(q, r):
    """
    Names the case of the analytic formula that covers the prime `r`

    Returns ``'characteristic'`` when `r` is the characteristic, ``'minus'``
    when `r` divides ``(q - 1)/g`` and ``'plus'`` when `r` divides
    ``(q + 1)/g``, where ``g = gcd(2, q - 1)``. Exactly one applies to every
    prime dividing the group order.

    Raises
    ------
    PrimeNotInSpectrum
        When `r` does not divide the order of PSL(2,q)

    """
    p, _ = require_prime_power(q)
    if not isprime(r) or psl2_order(q) % r != 0:
        raise PrimeNotInSpectrum(
            '{} does not divide |PSL(2,{})| = {}'.format(r, q, psl2_order(q)))
    g = gcd(2, q - 1)
    if r == p:
        return CHARACTERISTIC
    if ((q - 1) // g) % r == 0:
        return MINUS
    return PLUS


def mu_analytic(q, r):
    """
    Returns mu_r(PSL(2,q)) from the closed formulas

    Parameters
    ----------
    q : int
        Prime power
    r : int
        Prime dividing the group order

    Returns
    -------
    mu : :class:`fractions.Fraction`
        ``1/q`` or ``2/q`` for the characteristic (even or odd `q`), and
        ``1/2 - 1/(2 m)`` otherwise, with `m` the `r`-part of whichever of
        ``(q - 1)/g`` and ``(q + 1)/g`` the prime divides

    Examples
    --------

    >>> mupsl.mu_analytic(4, 2)
    Fraction(1, 4)
    >>> mupsl.mu_analytic(9, 3)
    Fraction(2, 9)
    >>> mupsl.mu_analytic(5, 5)
    Fraction(2, 5)

    """
    branch = mu_branch(q, r)
    g = gcd(2, q - 1)
    if branch == CHARACTERISTIC:
        return Fraction(g, q)
    side = (q - 1) // g if branch == MINUS else (q + 1) // g
    m = p_part(side, r)
    return Fraction(1, 2) - Fraction(1, 2 * m)


def mu_profile_analytic(q):
    """
    Returns the analytic mu-profile of PSL(2,q)

    Examples
    --------

    >>> print(mupsl.mu_profile_analytic(8))
    {2: 1/8, 3: 4/9, 7: 3/7}

    """
    return MuProfile({r: mu_analytic(q, r)
                      for r in primefactors(psl2_order(q))})


def _order_roots(order):
    candidates = set()
    for target in (order, 2 * order):
        root, _ = integer_nthroot(target, 3)
        for delta in (-1, 0, 1, 2):
            candidates.add(int(root) + delta)
    return sorted(c for c in candidates if c >= 4 and is_prime_power(c))


def identify_psl2(values):
    """
    Finds every q >= 4 whose PSL(2,q) has the given mu value set

    Parameters
    ----------
    values : iterable
        Exact rationals

    Returns
    -------
    qs : tuple
        Matching values of q in ascending order; empty when nothing matches
        and ``(4, 5)`` for the profile shared by PSL(2,4) and PSL(2,5)

    Raises
    ------
    MalformedProfile
        When the values are not the value set of any mu-profile

    Examples
    --------

    >>> from fractions import Fraction as F
    >>> mupsl.identify_psl2({F(1, 4), F(1, 3), F(2, 5)})
    (4, 5)
    >>> mupsl.identify_psl2({F(1, 2)})
    ()

    """
    profile = profile_from_value_set(values)
    order = profile.order()
    found = []
    for q in _order_roots(order):
        if psl2_order(q) == order and mu_profile_analytic(q) == profile:
            found.append(q)
    return tuple(found)


@auditable
def brute_vs_analytic(q):
    """
    Compares the enumerated census and mu-profile of PSL(2,q) with the
    analytic ones

    Examples
    --------

    >>> mupsl.brute_vs_analytic(9).verdict
    'pass'

    """
    G = psl2_group(q)
    brute_census = element_order_census(G, q)
    brute_profile = mu_profile(G)
    analytic_census = element_order_census_analytic(q)
    analytic_profile = mu_profile_analytic(q)
    census_match = brute_census == analytic_census
    profile_match = brute_profile == analytic_profile
    return AuditReport(
        'psl2_brute_vs_analytic/q={:03d}'.format(q),
        inputs=OrderedDict([('q', q)]),
        lhs=brute_profile, rhs=analytic_profile,
        verdict=verdict_of(census_match and profile_match),
        source='enumerated census and mu-profile equal the closed formulas',
        details=OrderedDict([
            ('order', G.order()),
            ('census_match', census_match),
            ('profile_match', profile_match),
            ('brute_census', brute_census),
            ('analytic_census', analytic_census)]))


@auditable
def p_element_class_audit(q):
    """
    Counts the classes of nontrivial p-elements of PSL(2,q)

    There is one class for even `q` and two for odd `q`.
    """
    p, _ = require_prime_power(q)
    G = psl2_group(q)
    classes = len(conjugacy_class_reps(G, filter_prime=p))
    expected = 1 if p == 2 else 2
    return AuditReport(
        'psl2_p_element_classes/q={:03d}'.format(q),
        inputs=OrderedDict([('q', q)]), lhs=classes, rhs=expected,
        verdict=verdict_of(classes == expected),
        source='PSL(2,q) has 1 class of p-elements for even q, 2 for odd q')
