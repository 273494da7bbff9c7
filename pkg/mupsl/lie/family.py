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

import re
import warnings

from mupsl.exceptions import ConstraintViolation
from mupsl.util.package_utils import require_prime_power


CLASSICAL = ('PSL', 'PSU', 'PSp', 'POmega', 'POmega+', 'POmega-')
EXCEPTIONAL = ('2B2', '3D4', 'G2', '2G2', 'F4', '2F4', 'E6', '2E6', 'E7',
               'E8')
TAGS = CLASSICAL + EXCEPTIONAL

MIN_RANK = {'PSL': 2, 'PSU': 3, 'PSp': 2, 'POmega': 2, 'POmega+': 3,
            'POmega-': 2}

# Families whose q0 must be an odd power of a fixed prime
ODD_POWER_OF = {'2B2': 2, '2G2': 3, '2F4': 2}

_ALIASES = {
    'psl': 'PSL', 'l': 'PSL', 'psu': 'PSU', 'u': 'PSU', 'psp': 'PSp',
    's': 'PSp', 'pomega': 'POmega', 'o': 'POmega', 'pomega+': 'POmega+',
    'o+': 'POmega+', 'pomega-': 'POmega-', 'o-': 'POmega-',
    'sz': '2B2', '2b2': '2B2', '3d4': '3D4', 'g2': 'G2', 'ree': '2G2',
    '2g2': '2G2', 'f4': 'F4', '2f4': '2F4', 'e6': 'E6', '2e6': '2E6',
    'e7': 'E7', 'e8': 'E8'}

_LABEL = re.compile(r'^\s*([A-Za-z0-9+\-]+?)\s*(?:\(\s*(\d+)\s*\))?\s*$')


def normalize_tag(tag):
    """
    Returns the canonical family tag for a user-supplied name

    Raises :class:`ConstraintViolation` for unknown names.
    """
    key = str(tag).strip()
    if key in TAGS:
        return key
    canonical = _ALIASES.get(key.lower())
    if canonical is None:
        raise ConstraintViolation('Unknown Lie family: {}'.format(tag))
    return canonical


class LieFamily:
    """
    One of the sixteen families of finite simple groups of Lie type

    Parameters
    ----------
    tag : string
        Family tag, such as ``'PSL'``, ``'POmega-'`` or ``'G2'``
    n : int, optional
        Rank parameter of a classical family: ``PSL(n)``, ``PSU(n)``,
        ``PSp(2n)``, ``POmega(2n+1)`` and ``POmega+/-(2n)``

    Examples
    --------

    >>> L = mupsl.LieFamily('PSp', 2)
    >>> str(L)
    'PSp(4)'
    >>> mupsl.LieFamily.from_string('POmega-(8)').n
    4

    Notes
    -----

    Ranks are checked against the family minimum; ``POmega(5)`` is accepted
    with a warning, since it coincides with ``PSp(4)``. Exceptional families
    carry no rank.

    """

    __slots__ = ('_tag', '_n')

    def __init__(self, tag, n=None):
        tag = normalize_tag(tag)
        if tag in CLASSICAL:
            if n is None:
                raise ConstraintViolation(
                    'Family {} needs a rank parameter'.format(tag))
            n = int(n)
            if n < MIN_RANK[tag]:
                raise ConstraintViolation(
                    '{} needs n >= {}, got {}'.format(tag, MIN_RANK[tag], n))
            if tag == 'POmega' and n == 2:
                warnings.warn(
                    'POmega(5) is isomorphic to PSp(4); simplicity of the '
                    'odd-dimensional family starts at n = 3', UserWarning)
        elif n is not None:
            raise ConstraintViolation(
                'Exceptional family {} takes no rank'.format(tag))
        self._tag = tag
        self._n = n

    @classmethod
    def from_string(cls, text):
        """
        Parses labels such as ``'PSL(3)'``, ``'PSp(4)'`` or ``'E8'``

        The number in parentheses is the dimension of the natural module,
        so ``PSp(4)`` has rank parameter 2.
        """
        match = _LABEL.match(str(text))
        if match is None:
            raise ConstraintViolation('Cannot parse Lie family {!r}'.format(
                text))
        tag = normalize_tag(match.group(1))
        dim = match.group(2)
        if dim is None:
            return cls(tag)
        dim = int(dim)
        if tag in ('PSL', 'PSU'):
            return cls(tag, dim)
        if tag == 'POmega':
            if dim % 2 == 0:
                raise ConstraintViolation(
                    'POmega dimension must be odd, got {}'.format(dim))
            return cls(tag, (dim - 1) // 2)
        if tag in ('PSp', 'POmega+', 'POmega-'):
            if dim % 2:
                raise ConstraintViolation(
                    '{} dimension must be even, got {}'.format(tag, dim))
            return cls(tag, dim // 2)
        raise ConstraintViolation(
            'Exceptional family {} takes no dimension'.format(tag))

    @property
    def tag(self):
        return self._tag

    @property
    def n(self):
        return self._n

    @property
    def is_classical(self):
        return self._tag in CLASSICAL

    def dimension(self):
        if self._tag in ('PSL', 'PSU'):
            return self._n
        if self._tag == 'POmega':
            return 2 * self._n + 1
        if self.is_classical:
            return 2 * self._n
        return None

    def check_q0(self, q0):
        """
        Validates `q0` for this family and returns its prime decomposition

        Raises
        ------
        NotPrimePower
            When `q0` is not a prime power
        ConstraintViolation
            When the family needs an odd power of 2 or 3 and `q0` is not

        """
        p, k = require_prime_power(q0, name='q0')
        base = ODD_POWER_OF.get(self._tag)
        if base is not None and (p != base or k % 2 == 0):
            raise ConstraintViolation(
                '{} needs q0 = {}^(2s+1), got {}'.format(self._tag, base, q0))
        return p, k

    def __str__(self):
        dim = self.dimension()
        if dim is None:
            return self._tag
        return '{}({})'.format(self._tag, dim)

    def __repr__(self):
        if self._n is None:
            return 'mupsl.LieFamily({!r})'.format(self._tag)
        return 'mupsl.LieFamily({!r}, {})'.format(self._tag, self._n)

    def __eq__(self, other):
        if not isinstance(other, LieFamily):
            return NotImplemented
        return (self._tag, self._n) == (other._tag, other._n)

    def __hash__(self):
        return hash((self._tag, self._n))


def as_family(family):
    """
    Returns `family` as a :class:`LieFamily`, parsing strings such as
    ``'PSU(3)'``
    """
    if isinstance(family, LieFamily):
        return family
    return LieFamily.from_string(family)
