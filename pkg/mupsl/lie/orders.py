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
Orders of the Lie-type groups as products of cyclotomic values
"""

from collections import OrderedDict
from math import gcd, prod

from sympy import divisors, mobius, n_order, primefactors, totient

from mupsl.exceptions import DomainError, NotADivisor
from mupsl.report import AuditReport, verdict_of
from mupsl.structure import auditable
from mupsl.util.package_utils import is_prime_power, p_part
from .family import as_family
from .tables import cyclotomic_indices, denominator_d, e_L, exponent_h


def cyclotomic_value(m, x):
    """
    Returns Phi_m(x) as an exact integer

    Evaluated as the Moebius quotient of the products of ``x^(m/k) - 1``.

    Examples
    --------

    >>> mupsl.cyclotomic_value(6, 2)
    3
    >>> mupsl.cyclotomic_value(12, 2)
    13

    """
    if m < 1:
        raise DomainError(
            'Cyclotomic index must be positive, got {}'.format(m))
    if x < 2:
        raise DomainError('Cyclotomic argument must be >= 2, got {}'.format(x))
    numerator = 1
    denominator = 1
    for k in divisors(m):
        sign = int(mobius(k))
        if sign == 1:
            numerator *= x ** (m // k) - 1
        elif sign == -1:
            denominator *= x ** (m // k) - 1
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            'Moebius quotient for Phi_{}({}) is not exact'.format(m, x))
    return value


class CyclotomicFactorization:
    """
    Factored order ``q0^h prod_m Phi_m(q0)^e(m) / d`` of a Lie-type group

    Examples
    --------

    >>> F = mupsl.factorize(mupsl.LieFamily('PSL', 3), 2)
    >>> F.factors()
    [(1, 1, 2), (2, 3, 1), (3, 7, 1)]
    >>> F.order()
    168

    """

    def __init__(self, family, q0, d, h, exponents):
        self.family = family
        self.q0 = q0
        self.d = d
        self.h = h
        self.exponents = OrderedDict(sorted(exponents.items()))

    def factors(self):
        """Returns ``(m, Phi_m(q0), e)`` for every occurring m"""
        return [(m, cyclotomic_value(m, self.q0), e)
                for m, e in self.exponents.items()]

    def order(self):
        numerator = self.q0 ** self.h
        for _, value, e in self.factors():
            numerator *= value ** e
        order, remainder = divmod(numerator, self.d)
        if remainder:
            raise ArithmeticError('d = {} does not divide the order of {}({})'
                                  .format(self.d, self.family, self.q0))
        return order

    def to_json(self):
        out = OrderedDict()
        out['family'] = str(self.family)
        out['q0'] = self.q0
        out['d'] = self.d
        out['h'] = self.h
        out['factors'] = [list(f) for f in self.factors()]
        out['order'] = self.order()
        return out

    def __repr__(self):
        return 'mupsl.CyclotomicFactorization({}, q0={})'.format(
            self.family, self.q0)


def factorize(family, q0):
    """
    Returns the cyclotomic factorization of the order of ``L(q0)``

    Raises
    ------
    ConstraintViolation
        When `q0` does not fit the family
    """
    family = as_family(family)
    family.check_q0(q0)
    exponents = {m: e_L(family, m) for m in cyclotomic_indices(family)}
    return CyclotomicFactorization(
        family, q0, denominator_d(family, q0), exponent_h(family), exponents)


def cyclotomic_factors(family, q0):
    return factorize(family, q0).factors()


def lie_order(family, q0):
    """
    Returns the exact order of ``L(q0)``

    Examples
    --------

    >>> mupsl.lie_order('PSL(3)', 2)
    168
    >>> mupsl.lie_order('2B2', 8)
    29120

    """
    return factorize(family, q0).order()


def _classical_closed_form(tag, n, q):
    if tag == 'PSL':
        return (q ** (n * (n - 1) // 2)
                * prod(q ** i - 1 for i in range(2, n + 1)) // gcd(n, q - 1))
    if tag == 'PSU':
        return (q ** (n * (n - 1) // 2)
                * prod(q ** i - (-1) ** i for i in range(2, n + 1))
                // gcd(n, q + 1))
    if tag in ('PSp', 'POmega'):
        return (q ** (n * n) * prod(q ** (2 * i) - 1 for i in range(1, n + 1))
                // gcd(2, q - 1))
    sign = 1 if tag == 'POmega+' else -1
    return (q ** (n * (n - 1)) * (q ** n - sign)
            * prod(q ** (2 * i) - 1 for i in range(1, n))
            // gcd(4, q ** n - sign))


def _exceptional_closed_form(tag, q):
    if tag == '2B2':
        return q ** 2 * (q ** 2 + 1) * (q - 1)
    if tag == '3D4':
        return (q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1)
                * (q ** 2 - 1))
    if tag == 'G2':
        return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)
    if tag == '2G2':
        return q ** 3 * (q ** 3 + 1) * (q - 1)
    if tag == 'F4':
        return q ** 24 * prod(q ** i - 1 for i in (2, 6, 8, 12))
    if tag == '2F4':
        return (q ** 12 * (q ** 6 + 1) * (q ** 4 - 1) * (q ** 3 + 1)
                * (q - 1))
    if tag == 'E6':
        return (q ** 36 * prod(q ** i - 1 for i in (2, 5, 6, 8, 9, 12))
                // gcd(3, q - 1))
    if tag == '2E6':
        return (q ** 36 * (q ** 2 - 1) * (q ** 5 + 1) * (q ** 6 - 1)
                * (q ** 8 - 1) * (q ** 9 + 1) * (q ** 12 - 1)
                // gcd(3, q + 1))
    if tag == 'E7':
        return (q ** 63
                * prod(q ** i - 1 for i in (2, 6, 8, 10, 12, 14, 18))
                // gcd(2, q - 1))
    if tag == 'E8':
        return q ** 120 * prod(q ** i - 1
                               for i in (2, 8, 12, 14, 18, 20, 24, 30))
    raise ValueError('Unknown exceptional family: {}'.format(tag))


def closed_form_order(family, q0):
    """
    Returns the order of ``L(q0)`` from the product formula of its family

    Computed independently of the cyclotomic tables.

    Examples
    --------

    >>> mupsl.closed_form_order('PSU(3)', 3)
    6048

    """
    family = as_family(family)
    family.check_q0(q0)
    if family.is_classical:
        return _classical_closed_form(family.tag, family.n, q0)
    return _exceptional_closed_form(family.tag, q0)


@auditable
def verify_order_closed_form(family, q0):
    """
    Compares the reassembled cyclotomic order with the product formula

    Examples
    --------

    >>> r = mupsl.verify_order_closed_form('POmega-(8)', 2)
    >>> r.lhs, r.verdict
    (197406720, 'pass')

    """
    family = as_family(family)
    lhs = lie_order(family, q0)
    rhs = closed_form_order(family, q0)
    return AuditReport(
        'lie_order_closed_form/{}/q0={}'.format(family, q0),
        inputs=OrderedDict([('family', str(family)), ('q0', q0)]),
        lhs=lhs, rhs=rhs, verdict=verdict_of(lhs == rhs),
        source='q0^h prod Phi_m(q0)^e(m) / d equals the product formula',
        details=OrderedDict([('factorization', factorize(family, q0))]))


def is_zsigmondy_exception(q0, m):
    """
    Checks whether q0^m - 1 has no primitive prime divisor

    These are m = 1 with q0 = 2, m = 2 with q0 + 1 a power of 2, and
    (q0, m) = (2, 6).
    """
    if m == 1 and q0 == 2:
        return True
    if m == 2 and p_part(q0 + 1, 2) == q0 + 1:
        return True
    return q0 == 2 and m == 6


def primitive_prime(q0, m):
    """
    Returns the least primitive prime divisor of ``q0^m - 1``

    A primitive prime divides ``q0^m - 1`` but no ``q0^k - 1`` with
    ``k < m``; every one of them divides Phi_m(q0).

    Returns
    -------
    r : int or None
        None exactly in the exceptional cases

    Examples
    --------

    >>> mupsl.primitive_prime(2, 4)
    5
    >>> mupsl.primitive_prime(3, 5)
    11
    >>> mupsl.primitive_prime(2, 6) is None
    True

    """
    if q0 < 2 or m < 1:
        raise DomainError('primitive_prime needs q0 >= 2 and m >= 1')
    if is_zsigmondy_exception(q0, m):
        return None
    for r in primefactors(cyclotomic_value(m, q0)):
        if n_order(q0, r) == m:
            return int(r)
    raise ArithmeticError(
        'No primitive prime divisor of {}^{} - 1 found'.format(q0, m))


def sylow_part_from_factor(family, q0, m, p):
    """
    Returns ``(Phi_m(q0))_p ^ e(m)``, the p-part contributed by Phi_m

    Raises
    ------
    DomainError
        When Phi_m does not occur in the order of the family
    NotADivisor
        When `p` does not divide Phi_m(q0)

    Examples
    --------

    >>> mupsl.sylow_part_from_factor('PSL(6)', 2, 3, 7)
    49
    >>> mupsl.sylow_part_from_factor('2B2', 8, 4, 5)
    5

    """
    family = as_family(family)
    family.check_q0(q0)
    e = e_L(family, m)
    if e == 0:
        raise DomainError('Phi_{} does not occur in the order of {}'.format(
            m, family))
    value = cyclotomic_value(m, q0)
    if value % p != 0:
        raise NotADivisor('{} does not divide Phi_{}({}) = {}'.format(
            p, m, q0, value))
    return p_part(value, p) ** e


@auditable
def gln_bound_check(q0, m):
    """
    Checks ``Phi_m(q0) < 4 q0^phi(m)``

    Examples
    --------

    >>> r = mupsl.gln_bound_check(9, 12)
    >>> r.lhs, r.rhs
    (6481, 26244)

    """
    lhs = cyclotomic_value(m, q0)
    rhs = 4 * q0 ** int(totient(m))
    return AuditReport(
        'cyclotomic_bound/q0={}/m={:02d}'.format(q0, m),
        inputs=OrderedDict([('q0', q0), ('m', m)]), lhs=lhs, rhs=rhs,
        verdict=verdict_of(lhs < rhs),
        source='Phi_m(q0) < 4 q0^phi(m)',
        details=OrderedDict([('q0_is_prime_power', is_prime_power(q0))]))
