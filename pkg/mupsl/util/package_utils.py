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
Package-wide utility functions
"""

import sys
from fractions import Fraction
from math import gcd
from threading import RLock

from sympy import factorint, isprime, multiplicity

import mupsl
from mupsl.exceptions import NotPrime, NotPrimePower


def load_package_globals():
    mupsl.lock = RLock()
    mupsl.container = None

    # Audit verdicts
    mupsl.PASS = 'pass'
    mupsl.FAIL = 'fail'
    mupsl.VACUOUS = 'vacuous'
    mupsl.SURVIVOR = 'survivor'

    mupsl.OK_VERDICTS = (mupsl.PASS, mupsl.VACUOUS, mupsl.SURVIVOR)


def note(message, level=3):
    """
    Prints an informational message when the verbosity allows it

    Messages go to standard error, so that results written to standard output
    stay identical between runs.
    """
    verbosity = mupsl.config['verbosity'] if mupsl.config else 0
    if verbosity >= level:
        print('NOTE: {}'.format(message), file=sys.stderr)


def p_part(nval, p):
    """
    Returns the largest power of `p` dividing `nval`

    Parameters
    ----------
    nval : int
        Positive integer
    p : int
        Prime

    Returns
    -------
    part : int
        :math:`n_p`, equal to 1 when `p` does not divide `nval`

    Examples
    --------

    >>> mupsl.p_part(24, 2)
    8
    >>> mupsl.p_part(63, 3)
    9
    >>> mupsl.p_part(35, 2)
    1

    """
    if nval < 1:
        raise ValueError('p-part is defined for positive integers only')
    return p ** multiplicity(p, nval)


def p_prime_part(nval, p):
    return nval // p_part(nval, p)


def prime_power_decomposition(nval):
    """
    Returns the pair ``(p, k)`` with ``nval = p**k`` and ``k >= 1``

    Returns None when `nval` is not a prime power.
    """
    if nval < 2:
        return None
    factors = factorint(nval)
    if len(factors) != 1:
        return None
    return next(iter(factors.items()))


def is_prime_power(nval):
    return prime_power_decomposition(nval) is not None


def require_prime(p, name='p'):
    if not isprime(p):
        raise NotPrime('{} = {} is not a prime'.format(name, p))
    return p


def require_prime_power(q, name='q'):
    decomposition = prime_power_decomposition(q)
    if decomposition is None:
        raise NotPrimePower('{} = {} is not a prime power'.format(name, q))
    return decomposition


def gcd2(q):
    """Returns gcd(2, q - 1)"""
    return gcd(2, q - 1)


def format_rational(value):
    """
    Renders an exact rational as ``"num/den"``

    Integers render bare, so ``"1/1"`` never appears.

    Examples
    --------

    >>> mupsl.format_rational(Fraction(2, 4))
    '1/2'
    >>> mupsl.format_rational(Fraction(3, 1))
    '3'

    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def parse_rational(text):
    """
    Parses ``"num/den"`` or an integer into an exact rational

    Floating point notation is rejected.
    """
    text = str(text).strip()
    if not text or any(c in text for c in '.eE'):
        raise ValueError('Cannot parse {!r} as an exact rational'.format(text))
    return Fraction(text)
