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
Counting r-singular elements by enumeration
"""

from fractions import Fraction

from sympy import isprime, primefactors

from mupsl.libs import np
from mupsl.exceptions import CoprimalityViolation, PrimeNotInSpectrum
from mupsl.util.package_utils import p_part
from .profile import MuDecomposition, MuProfile


def prime_spectrum(G):
    """
    Returns the primes dividing the group order in ascending order

    Examples
    --------

    >>> mupsl.prime_spectrum(mupsl.psl2_group(7))
    [2, 3, 7]

    """
    return [int(r) for r in primefactors(G.order())]


def _require_in_spectrum(G, r):
    if not isprime(r) or G.order() % r != 0:
        raise PrimeNotInSpectrum(
            '{} does not divide |{}| = {}'.format(r, G, G.order()))


def singular_count(G, r):
    """
    Returns the number of elements of `G` whose order is divisible by `r`

    Examples
    --------

    >>> mupsl.singular_count(mupsl.catalog.get_group('A5'), 2)
    15

    """
    _require_in_spectrum(G, r)
    return int(np.count_nonzero(G.element_orders() % r == 0))


def mu_r(G, r):
    """
    Returns the exact proportion of `r`-singular elements of `G`

    Examples
    --------

    >>> mupsl.mu_r(mupsl.catalog.get_group('A5'), 2)
    Fraction(1, 4)

    """
    return Fraction(singular_count(G, r), G.order())


def mu_r_or_zero(G, r):
    """
    Returns mu_r(G), or 0 when `r` does not divide the order of `G`
    """
    if G.order() % r != 0:
        return Fraction(0)
    return mu_r(G, r)


def mu_profile(G):
    """
    Returns the mu-profile of `G`, one entry per prime of its spectrum

    Examples
    --------

    >>> print(mupsl.mu_profile(mupsl.catalog.get_group('A5')))
    {2: 1/4, 3: 1/3, 5: 2/5}

    """
    orders = G.element_orders()
    total = G.order()
    entries = {}
    for r in prime_spectrum(G):
        count = int(np.count_nonzero(orders % r == 0))
        entries[r] = Fraction(count, total)
    return MuProfile(entries)


def mu_decomposition(G, r):
    """
    Writes mu_r(G) as t/|R| with |R| the `r`-part of the group order

    Raises
    ------
    CoprimalityViolation
        When `t` is not an integer coprime to `r`

    Examples
    --------

    >>> mupsl.mu_decomposition(mupsl.catalog.get_group('SL(2,5)'), 2)
    mupsl.MuDecomposition(prime=2, t=5, sylow_order=8)

    """
    value = mu_r(G, r)
    sylow_order = p_part(G.order(), r)
    t = value * sylow_order
    if t.denominator != 1:
        raise CoprimalityViolation(
            'mu_{}({}) = {} is not a multiple of 1/{}'.format(
                r, G, value, sylow_order))
    return MuDecomposition(r, t.numerator, sylow_order)
