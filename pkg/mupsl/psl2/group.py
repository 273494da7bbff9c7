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

from functools import lru_cache
from math import gcd

from mupsl.libs import np
from mupsl.core.group import PermGroup
from mupsl.core.permutation import Permutation
from mupsl.util.package_utils import require_prime_power
from .field import build_field


def psl2_order(q):
    """
    Returns the order q(q^2 - 1)/gcd(2, q - 1) of PSL(2,q)

    Examples
    --------

    >>> mupsl.psl2_order(9)
    360
    >>> mupsl.psl2_order(49)
    58800

    """
    require_prime_power(q)
    return q * (q * q - 1) // gcd(2, q - 1)


def _line_map(field, affine):
    # Point 0 is infinity, point i + 1 is the field element i
    images = np.zeros(field.q + 1, dtype=np.intp)
    images[1:] = np.asarray(affine) + 1
    return images


def projective_generators(field):
    """
    Returns the generators of PSL(2,q) acting on the projective line

    The maps are ``x -> x + 1``, ``x -> c x`` with ``c`` the square of the
    primitive element (the primitive element itself in characteristic 2)
    and ``x -> -1/x``.
    """
    points = np.arange(field.q)
    translation = _line_map(field, field.add(points, 1))

    lam = field.primitive_element
    c = lam if field.p == 2 else field.power(lam, 2)
    scaling = _line_map(field, field.mul(points, c))

    inversion = np.zeros(field.q + 1, dtype=np.intp)
    inversion[0] = 1
    inversion[1] = 0
    nonzero = points[1:]
    inversion[2:] = field.neg(field.inv(nonzero)) + 1
    return [Permutation(g) for g in (translation, scaling, inversion)]


@lru_cache(maxsize=None)
def _psl2_group(q):
    p, f = require_prime_power(q)
    field = build_field(p, f)
    G = PermGroup(projective_generators(field), degree=q + 1,
                  name='PSL(2,{})'.format(q))
    if G.order() != psl2_order(q):
        raise ArithmeticError(
            'Generators of PSL(2,{}) produced a group of order {}'.format(
                q, G.order()))
    return G


def psl2_group(q):
    """
    Returns PSL(2,q) as a permutation group on the q + 1 projective points

    Parameters
    ----------
    q : int
        Prime power

    Returns
    -------
    G : :class:`PermGroup`
        Group of degree ``q + 1`` named ``PSL(2,q)``

    Raises
    ------
    NotPrimePower
        When `q` is not a prime power
    BudgetExceeded
        When GF(q) exceeds the field budget

    Examples
    --------

    >>> G = mupsl.psl2_group(7)
    >>> G.degree, G.order()
    (8, 168)

    """
    p, f = require_prime_power(q)
    build_field(p, f)
    return _psl2_group(q)
