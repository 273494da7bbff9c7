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
Table-driven arithmetic in GF(p^f)

Elements are encoded as integers ``0 <= a < q`` whose base-`p` digits are
the polynomial coefficients, constant term first. Comparing the integers
compares the coefficient sequences from the highest degree down.
"""

from functools import lru_cache
from math import gcd
from itertools import product

from sympy import primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_gcd, gf_mul, gf_pow_mod, gf_rem, gf_sub)

import mupsl
from mupsl.libs import np
from mupsl.exceptions import BudgetExceeded, DomainError
from mupsl.util.package_utils import note, require_prime


class FieldTable:
    """
    Finite field GF(p^f) with log and antilog tables

    Parameters
    ----------
    p : int
        Characteristic
    f : int
        Degree over the prime field
    modulus : list
        Coefficients of the monic irreducible modulus, highest degree first
    primitive_element : int
        Encoded generator of the multiplicative group

    Notes
    -----

    Use :func:`build_field` rather than the constructor; it picks the modulus
    and the primitive element deterministically.

    Every arithmetic method accepts scalars or :class:`numpy.ndarray` inputs.

    """

    def __init__(self, p, f, modulus, primitive_element):
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus = tuple(modulus)
        self.primitive_element = primitive_element
        q = self.q
        self._weights = p ** np.arange(f)
        self.digits = (np.arange(q).reshape(-1, 1) // self._weights) % p
        self.exp = np.zeros(q - 1, dtype=np.int64)
        self.log = np.zeros(q, dtype=np.int64)
        self.log[0] = -1
        value = 1
        generator = _to_poly(primitive_element, p, f)
        for k in range(q - 1):
            self.exp[k] = value
            self.log[value] = k
            value = _to_int(
                gf_rem(gf_mul(_to_poly(value, p, f), generator, p, ZZ),
                       list(self.modulus), p, ZZ), p)
        if value != 1:
            raise ArithmeticError(
                '{} is not primitive in GF({})'.format(primitive_element, q))
        for t in (self.digits, self.exp, self.log):
            t.flags.writeable = False

    def _encode(self, digits):
        return np.dot(digits, self._weights)

    def add(self, a, b):
        return self._encode((self.digits[a] + self.digits[b]) % self.p)

    def neg(self, a):
        return self._encode((-self.digits[a]) % self.p)

    def sub(self, a, b):
        return self._encode((self.digits[a] - self.digits[b]) % self.p)

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        zero = (a == 0) | (b == 0)
        k = (self.log[a] + self.log[b]) % (self.q - 1)
        return np.where(zero, 0, self.exp[k])

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError(
                '0 has no inverse in GF({})'.format(self.q))
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def power(self, a, k):
        if a == 0:
            return 0 if k > 0 else 1
        return int(self.exp[(int(self.log[a]) * k) % (self.q - 1)])

    def element_order(self, a):
        if a == 0:
            raise ZeroDivisionError('0 is not a unit')
        n = self.q - 1
        k = int(self.log[a])
        return n // gcd(n, k)

    def modulus_str(self):
        return _poly_str(list(self.modulus), 'x')

    def __str__(self):
        return 'GF({})'.format(self.q)

    def __repr__(self):
        return 'mupsl.FieldTable(p={}, f={}, modulus={})'.format(
            self.p, self.f, self.modulus_str())


def _to_poly(value, p, f):
    coeffs = []
    for _ in range(f):
        coeffs.append(value % p)
        value //= p
    coeffs.reverse()
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    return coeffs


def _to_int(coeffs, p):
    value = 0
    for c in coeffs:
        value = value * p + int(c)
    return value


def _poly_str(coeffs, var):
    if not coeffs:
        return '0'
    degree = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        k = degree - i
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        power = var if k == 1 else '{}^{}'.format(var, k)
        terms.append(power if c == 1 else '{}*{}'.format(c, power))
    return ' + '.join(terms)


def is_irreducible(modulus, p):
    """
    Checks a monic polynomial over GF(p) for irreducibility

    A polynomial `g` of degree `f` is irreducible exactly when it is coprime
    to ``x^(p^k) - x`` for every ``1 <= k < f``.
    """
    f = len(modulus) - 1
    x = [1, 0]
    for k in range(1, f):
        frobenius = gf_pow_mod(x, p ** k, modulus, p, ZZ)
        if gf_gcd(modulus, gf_sub(frobenius, x, p, ZZ), p, ZZ) != [1]:
            return False
    return True


def least_irreducible(p, f):
    """
    Returns the lexicographically least monic irreducible of degree `f`

    Coefficients are compared from the highest degree down.

    Examples
    --------

    >>> mupsl.least_irreducible(2, 2)
    [1, 1, 1]
    >>> mupsl.least_irreducible(3, 2)
    [1, 0, 1]

    """
    for tail in product(range(p), repeat=f):
        modulus = [1] + list(tail)
        if f > 1 and tail[-1] == 0:
            continue
        if is_irreducible(modulus, p):
            return modulus
    raise ArithmeticError(
        'No irreducible polynomial of degree {} over GF({})'.format(f, p))


def _is_primitive(a, p, f, modulus):
    n = p ** f - 1
    poly = _to_poly(a, p, f)
    for ell in primefactors(n):
        if gf_pow_mod(poly, n // ell, modulus, p, ZZ) == [1]:
            return False
    return True


@lru_cache(maxsize=None)
def _build_field(p, f):
    modulus = least_irreducible(p, f)
    primitive = next(a for a in range(1, p ** f)
                     if _is_primitive(a, p, f, modulus))
    note('Built GF({}) with modulus {}'.format(
        p ** f, _poly_str(modulus, 'x')), 4)
    return FieldTable(p, f, modulus, primitive)


def build_field(p, f):
    """
    Builds the field GF(p^f) deterministically

    Parameters
    ----------
    p : int
        Prime characteristic
    f : int
        Positive degree

    Returns
    -------
    field : :class:`FieldTable`
        Field over the least monic irreducible of degree `f`, with the least
        primitive element

    Raises
    ------
    NotPrime
        When `p` is not a prime
    BudgetExceeded
        When ``p**f`` exceeds ``mupsl.config['field_budget']``

    Examples
    --------

    >>> F = mupsl.build_field(5, 1)
    >>> F.primitive_element
    2
    >>> mupsl.build_field(2, 2).modulus_str()
    'x^2 + x + 1'

    """
    require_prime(p)
    if f < 1:
        raise DomainError('Field degree must be positive, got {}'.format(f))
    budget = mupsl.config['field_budget']
    if p ** f > budget:
        raise BudgetExceeded(
            'GF({}) exceeds the field budget {}'.format(p ** f, budget))
    return _build_field(p, f)
