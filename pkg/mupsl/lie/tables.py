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
Cyclotomic exponents, q0-exponents and denominators of the Lie-type orders

The order of ``L(q0)`` is ``q0^h prod_m Phi_m(q0)^e(m) / d``.
"""

from math import gcd

from sympy import ilcm


_EXCEPTIONAL_EXPONENTS = {
    '2B2': {1: 1, 4: 1},
    '3D4': {1: 2, 2: 2, 3: 2, 6: 2, 12: 1},
    'G2': {1: 2, 2: 2, 3: 1, 6: 1},
    '2G2': {1: 1, 2: 1, 6: 1},
    'F4': {1: 4, 2: 4, 3: 2, 4: 2, 6: 2, 8: 1, 12: 1},
    '2F4': {1: 2, 2: 2, 4: 2, 6: 1, 12: 1},
    'E6': {1: 6, 2: 4, 3: 3, 4: 2, 5: 1, 6: 2, 8: 1, 9: 1, 12: 1},
    '2E6': {1: 4, 2: 6, 3: 2, 4: 2, 6: 3, 8: 1, 10: 1, 12: 1, 18: 1},
    'E7': {1: 7, 2: 7, 3: 3, 4: 2, 5: 1, 6: 3, 7: 1, 8: 1, 9: 1, 10: 1,
           12: 1, 14: 1, 18: 1},
    'E8': {1: 8, 2: 8, 3: 4, 4: 4, 5: 2, 6: 4, 7: 1, 8: 2, 9: 1, 10: 2,
           12: 2, 14: 1, 15: 1, 18: 1, 20: 1, 24: 1, 30: 1},
}

_EXCEPTIONAL_H = {'2B2': 2, '3D4': 12, 'G2': 6, '2G2': 3, 'F4': 24,
                  '2F4': 12, 'E6': 36, '2E6': 36, 'E7': 63, 'E8': 120}


def _classical_exponent(tag, n, x):
    if tag == 'PSL':
        if x == 1:
            return n - 1
        return n // x
    if tag == 'PSU':
        if x == 2:
            return n - 1
        if x > 2 and x % 4 == 2:
            return 2 * n // x
        return n // int(ilcm(2, x))
    if tag in ('PSp', 'POmega'):
        return 2 * n // int(ilcm(2, x))
    if tag == 'POmega+':
        if n % x != 0 and (2 * n) % x == 0:
            return 2 * n // x - 1
        return 2 * n // int(ilcm(2, x))
    if tag == 'POmega-':
        if n % x == 0:
            return 2 * n // int(ilcm(2, x)) - 1
        return 2 * n // int(ilcm(2, x))
    raise ValueError('Not a classical family: {}'.format(tag))


def e_L(family, m):
    """
    Returns the exponent of Phi_m in the order of the family

    Parameters
    ----------
    family : :class:`LieFamily`
        Lie family with its rank
    m : int
        Positive index of the cyclotomic factor

    Returns
    -------
    e : int
        Exponent, 0 when Phi_m does not occur

    Examples
    --------

    >>> mupsl.e_L(mupsl.LieFamily('PSL', 3), 1)
    2
    >>> mupsl.e_L(mupsl.LieFamily('E8'), 30)
    1

    """
    if m < 1:
        raise ValueError('Cyclotomic index must be positive, got {}'.format(m))
    if family.is_classical:
        return max(_classical_exponent(family.tag, family.n, m), 0)
    return _EXCEPTIONAL_EXPONENTS[family.tag].get(m, 0)


def max_index(family):
    """Returns an upper bound for the m with a positive exponent"""
    if family.is_classical:
        return 2 * family.n
    return max(_EXCEPTIONAL_EXPONENTS[family.tag])


def cyclotomic_indices(family):
    """
    Returns the m with a positive exponent in ascending order
    """
    return [m for m in range(1, max_index(family) + 1) if e_L(family, m) > 0]


def exponent_h(family):
    """
    Returns the exponent of q0 in the order of the family

    Examples
    --------

    >>> mupsl.exponent_h(mupsl.LieFamily('PSL', 4))
    6
    >>> mupsl.exponent_h(mupsl.LieFamily('2B2'))
    2

    """
    if not family.is_classical:
        return _EXCEPTIONAL_H[family.tag]
    n = family.n
    if family.tag in ('PSL', 'PSU'):
        return n * (n - 1) // 2
    if family.tag in ('PSp', 'POmega'):
        return n * n
    return n * (n - 1)


def denominator_d(family, q0):
    """
    Returns the order of the center that is divided out

    Examples
    --------

    >>> mupsl.denominator_d(mupsl.LieFamily('E7'), 3)
    2

    """
    tag = family.tag
    n = family.n
    if tag == 'PSL':
        return gcd(n, q0 - 1)
    if tag == 'PSU':
        return gcd(n, q0 + 1)
    if tag in ('PSp', 'POmega'):
        return gcd(2, q0 - 1)
    if tag == 'POmega+':
        return gcd(4, q0 ** n - 1)
    if tag == 'POmega-':
        return gcd(4, q0 ** n + 1)
    if tag == 'E6':
        return gcd(3, q0 - 1)
    if tag == '2E6':
        return gcd(3, q0 + 1)
    if tag == 'E7':
        return gcd(2, q0 - 1)
    return 1
