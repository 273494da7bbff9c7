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

from collections import OrderedDict
from collections.abc import Mapping
from fractions import Fraction
from math import gcd

from mupsl.exceptions import CoprimalityViolation, MalformedProfile
from mupsl.util.package_utils import (
    format_rational, p_part, prime_power_decomposition)


class MuProfile(Mapping):
    """
    Exact map from each prime `r` to the proportion of `r`-singular elements

    Parameters
    ----------
    entries : dict
        Map from prime to :class:`fractions.Fraction`

    Examples
    --------

    >>> p = mupsl.MuProfile({2: Fraction(1, 4), 3: Fraction(1, 3)})
    >>> p.value_set() == {Fraction(1, 4), Fraction(1, 3)}
    True
    >>> p.to_json()
    OrderedDict([('2', '1/4'), ('3', '1/3')])

    Notes
    -----

    Each value lies strictly between 0 and 1 and its reduced denominator is a
    power of its prime. Values at distinct primes are therefore distinct and
    the value set determines the map.

    """

    def __init__(self, entries=None):
        entries = dict(entries or {})
        checked = OrderedDict()
        for r in sorted(entries):
            value = Fraction(entries[r])
            _check_entry(r, value)
            checked[int(r)] = value
        self._entries = checked

    def __getitem__(self, r):
        return self._entries[r]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return dict(self._entries) == dict(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def primes(self):
        return list(self._entries)

    def value_set(self):
        return frozenset(self._entries.values())

    def order(self):
        out = 1
        for value in self._entries.values():
            out *= value.denominator
        return out

    def to_json(self):
        return OrderedDict(
            (str(r), format_rational(v)) for r, v in self._entries.items())

    def __str__(self):
        inner = ', '.join('{}: {}'.format(r, format_rational(v))
                          for r, v in self._entries.items())
        return '{' + inner + '}'

    def __repr__(self):
        return 'mupsl.MuProfile({})'.format(str(self))


def _check_entry(r, value):
    if not 0 < value < 1:
        raise MalformedProfile(
            'Value {} at prime {} is not strictly between 0 and 1'.format(
                format_rational(value), r))
    decomposition = prime_power_decomposition(value.denominator)
    if decomposition is None or decomposition[0] != r:
        raise MalformedProfile(
            'Denominator of {} is not a power of {}'.format(
                format_rational(value), r))


class MuDecomposition:
    """
    Decomposition of a mu value as t/|R| with |R| the r-part of the order

    Raises :class:`CoprimalityViolation` when `t` is not coprime to `r`.
    """

    def __init__(self, prime, t, sylow_order):
        if gcd(t, prime) != 1:
            raise CoprimalityViolation(
                't = {} is not coprime to r = {}'.format(t, prime))
        if p_part(sylow_order, prime) != sylow_order:
            raise CoprimalityViolation(
                '|R| = {} is not a power of {}'.format(sylow_order, prime))
        self.prime = prime
        self.t = t
        self.sylow_order = sylow_order

    @property
    def value(self):
        return Fraction(self.t, self.sylow_order)

    def to_json(self):
        return OrderedDict([('prime', self.prime), ('t', self.t),
                            ('sylow_order', self.sylow_order)])

    def __eq__(self, other):
        if not isinstance(other, MuDecomposition):
            return NotImplemented
        return (self.prime, self.t, self.sylow_order) == \
            (other.prime, other.t, other.sylow_order)

    def __repr__(self):
        return 'mupsl.MuDecomposition(prime={}, t={}, sylow_order={})'.format(
            self.prime, self.t, self.sylow_order)


def profile_from_value_set(values):
    """
    Rebuilds a mu-profile from its value set

    Parameters
    ----------
    values : iterable
        Exact rationals, or strings such as ``"1/4"``

    Returns
    -------
    profile : :class:`MuProfile`
        Map from the prime of each denominator to its value

    Examples
    --------

    >>> mupsl.profile_from_value_set({Fraction(1, 4), Fraction(1, 3)})
    mupsl.MuProfile({2: 1/4, 3: 1/3})

    """
    entries = dict()
    for value in values:
        value = Fraction(value)
        if not 0 < value < 1:
            raise MalformedProfile(
                'Value {} is not strictly between 0 and 1'.format(
                    format_rational(value)))
        decomposition = prime_power_decomposition(value.denominator)
        if decomposition is None:
            raise MalformedProfile(
                'Denominator {} of {} is not a prime power'.format(
                    value.denominator, format_rational(value)))
        r = decomposition[0]
        if r in entries and entries[r] != value:
            raise MalformedProfile(
                'Values {} and {} share the prime {}'.format(
                    format_rational(entries[r]), format_rational(value), r))
        entries[r] = value
    return MuProfile(entries)


def order_from_mu(values):
    """
    Returns the group order encoded by a mu value set

    The reduced denominators are the Sylow orders, so their product is the
    group order.

    Examples
    --------

    >>> mupsl.order_from_mu({Fraction(1, 4), Fraction(1, 3), Fraction(2, 5)})
    60

    """
    return profile_from_value_set(values).order()
