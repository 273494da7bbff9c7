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
Sporadic groups, the Tits group and their mu constants
"""

from collections import OrderedDict
from fractions import Fraction
from functools import lru_cache
from math import prod

from sympy import isprime

from mupsl.exceptions import DomainError
from mupsl.report import AuditReport, verdict_of
from mupsl.structure import auditable
from mupsl.util.package_utils import is_prime_power, note, p_part


class SporadicEntry:
    """
    Order of a sporadic simple group with its prime factorization

    Parameters
    ----------
    name : string
        ATLAS name of the group
    order : int
        Group order
    factorization : dict
        Prime to exponent

    Examples
    --------

    >>> e = mupsl.SporadicEntry('M11', 7920, {2: 4, 3: 2, 5: 1, 11: 1})
    >>> e.largest_sylow, e.largest_odd_sylow
    (16, 11)

    """

    def __init__(self, name, order, factorization):
        self.name = name
        self.order = order
        self.factorization = OrderedDict(sorted(factorization.items()))

    def validate(self):
        """
        Checks that the factorization multiplies back to the order
        """
        for p in self.factorization:
            if not isprime(p):
                raise ArithmeticError('{}: {} is not a prime'.format(
                    self.name, p))
        product = prod(p ** k for p, k in self.factorization.items())
        if product != self.order:
            raise ArithmeticError(
                '{}: factorization gives {}, expected {}'.format(
                    self.name, product, self.order))
        return self

    def sylow_parts(self):
        return OrderedDict((p, p_part(self.order, p))
                           for p in self.factorization)

    @property
    def largest_sylow(self):
        return max(self.sylow_parts().values())

    @property
    def largest_odd_sylow(self):
        return max(v for p, v in self.sylow_parts().items() if p != 2)

    def __repr__(self):
        return 'mupsl.SporadicEntry({}, {})'.format(self.name, self.order)


_SPORADIC_DATA = (
    ('M11', 7920, {2: 4, 3: 2, 5: 1, 11: 1}),
    ('M12', 95040, {2: 6, 3: 3, 5: 1, 11: 1}),
    ('J1', 175560, {2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1}),
    ('M22', 443520, {2: 7, 3: 2, 5: 1, 7: 1, 11: 1}),
    ('J2', 604800, {2: 7, 3: 3, 5: 2, 7: 1}),
    ('M23', 10200960, {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1}),
    ('HS', 44352000, {2: 9, 3: 2, 5: 3, 7: 1, 11: 1}),
    ('J3', 50232960, {2: 7, 3: 5, 5: 1, 17: 1, 19: 1}),
    ('M24', 244823040, {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1}),
    ('McL', 898128000, {2: 7, 3: 6, 5: 3, 7: 1, 11: 1}),
    ('He', 4030387200, {2: 10, 3: 3, 5: 2, 7: 3, 17: 1}),
    ('Ru', 145926144000, {2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1}),
    ('Suz', 448345497600, {2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1}),
    ("O'N", 460815505920, {2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1}),
    ('Co3', 495766656000, {2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1}),
    ('Co2', 42305421312000, {2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1}),
    ('Fi22', 64561751654400, {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1}),
    ('HN', 273030912000000, {2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1}),
    ('Ly', 51765179004000000,
     {2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1}),
    ('Th', 90745943887872000,
     {2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1}),
    ('Fi23', 4089470473293004800,
     {2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1}),
    ('Co1', 4157776806543360000,
     {2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1}),
    ('J4', 86775571046077562880,
     {2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1}),
    ("Fi24'", 1255205709190661721292800,
     {2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1}),
    ('B', 4154781481226426191177580544000000,
     {2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1, 23: 1, 31: 1,
      47: 1}),
    ('M', 808017424794512875886459904961710757005754368000000000,
     {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1,
      31: 1, 41: 1, 47: 1, 59: 1, 71: 1}),
    ("2F4(2)'", 17971200, {2: 11, 3: 3, 5: 2, 13: 1}),
)


@lru_cache(maxsize=None)
def sporadic_table():
    """
    Returns the validated entries of the 26 sporadic groups and the Tits
    group ``2F4(2)'``
    """
    entries = tuple(SporadicEntry(*row).validate() for row in _SPORADIC_DATA)
    note('Validated {} sporadic orders'.format(len(entries)), 4)
    return entries


def _psl2_bound(l):
    return l * (l * l - 1) // 2


@auditable
def sporadic_order_audit():
    """
    Compares every sporadic order with ``l(l^2 - 1)/2``

    Returns
    -------
    report : :class:`AuditReport`
        Each row carries the raw comparison with ``l`` the largest Sylow
        subgroup and the comparison with ``l`` the largest Sylow subgroup
        for an odd prime. A group of order ``|PSL(2,p^f)|`` with odd p has
        ``p^f`` at most the latter. The verdict follows the odd comparison;
        groups failing the raw one are listed in ``raw_failures``.

    Examples
    --------

    >>> r = mupsl.sporadic_order_audit()
    >>> r.verdict
    'pass'
    >>> r.details['raw_failures'][:3]
    ['M12', 'M22', 'J2']

    """
    rows = []
    raw_failures = []
    odd_failures = []
    for entry in sporadic_table():
        l_raw = entry.largest_sylow
        l_odd = entry.largest_odd_sylow
        raw = entry.order > _psl2_bound(l_raw)
        odd = entry.order > _psl2_bound(l_odd)
        rows.append(OrderedDict([
            ('group', entry.name), ('order', entry.order),
            ('largest_sylow', l_raw), ('raw_holds', raw),
            ('largest_odd_sylow', l_odd), ('odd_holds', odd)]))
        if not raw:
            raw_failures.append(entry.name)
        if not odd:
            odd_failures.append(entry.name)
    return AuditReport(
        'sporadic_orders',
        lhs=len(rows) - len(odd_failures), rhs=len(rows),
        verdict=verdict_of(not odd_failures),
        source='|S| > l(l^2 - 1)/2 for the largest Sylow subgroup order l',
        details=OrderedDict([('raw_failures', raw_failures),
                             ('odd_failures', odd_failures),
                             ('groups', rows)]))


ATLAS_CONSTANTS = OrderedDict([
    ('mu_3(Ru)', Fraction(8, 27)),
    ('mu_3(J4)', Fraction(8, 27)),
    ("mu_3(2F4(2)')", Fraction(7, 27)),
    ('mu_5(Th)', Fraction(24, 125)),
])


def tits_family_mu3(m):
    """
    Returns mu_3 of ``2F4(2^(2m+1))``

    The value is ``1 - (89/144 + 1/(4x) + 1/(48x^2))`` with
    ``x = (2^(2m+1) + 1)_3``.

    Examples
    --------

    >>> mupsl.tits_family_mu3(1)
    Fraction(86, 243)

    """
    if m < 1:
        raise DomainError('Family parameter m must be >= 1, got {}'.format(m))
    x = p_part(2 ** (2 * m + 1) + 1, 3)
    return 1 - (Fraction(89, 144) + Fraction(1, 4 * x)
                + Fraction(1, 48 * x * x))


def is_characteristic_value(value):
    """
    Checks whether `value` is ``1/q`` or ``2/q`` for a prime power q

    These are the mu values of the characteristic of a PSL(2,q).
    """
    value = Fraction(value)
    if not is_prime_power(value.denominator):
        return False
    if value.numerator == 1:
        return True
    return value.numerator == 2 and value.denominator % 2 == 1


@auditable
def atlas_constants_audit(m_range=range(1, 6)):
    """
    Checks that no ATLAS mu constant is a characteristic value

    The stored constants and ``mu_3(2F4(2^(2m+1)))`` for every m in
    `m_range` must lie strictly between 0 and 1 and differ from every
    ``1/q`` and ``2/q``.

    Examples
    --------

    >>> mupsl.atlas_constants_audit().verdict
    'pass'

    """
    values = OrderedDict(ATLAS_CONSTANTS)
    for m in m_range:
        values['mu_3(2F4(2^{}))'.format(2 * m + 1)] = tits_family_mu3(m)
    rows = []
    holds = True
    for name, value in values.items():
        in_range = 0 < value < 1
        characteristic = is_characteristic_value(value)
        rows.append(OrderedDict([('name', name), ('value', value),
                                 ('characteristic_value', characteristic)]))
        holds = holds and in_range and not characteristic
    return AuditReport(
        'atlas_constants',
        inputs=OrderedDict([('m_range', list(m_range))]),
        lhs=values, rhs=None, verdict=verdict_of(holds),
        source='no constant equals 1/q or 2/q for a prime power q',
        details=OrderedDict([('values', rows)]))
