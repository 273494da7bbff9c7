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
Built-in permutation groups
"""

from collections import OrderedDict
from functools import lru_cache

import mupsl
from mupsl.libs import np, pd
from mupsl.core.group import PermGroup
from mupsl.core.permutation import Permutation
from mupsl.psl2.group import psl2_group
from mupsl.util.package_utils import is_prime_power


def symmetric_group(n):
    """
    Returns S_n generated by ``(0 1)`` and the n-cycle

    Examples
    --------

    >>> mupsl.catalog.symmetric_group(5).order()
    120

    """
    if n < 1:
        raise ValueError('Degree must be positive, got {}'.format(n))
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles(n, [(0, 1)]))
    if n >= 3:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return PermGroup(gens, degree=n, name='S{}'.format(n))


def alternating_group(n):
    """
    Returns A_n generated by ``(0 1 2)`` and an even long cycle

    The long cycle moves every point for odd `n` and fixes 0 for even `n`.
    """
    if n < 3:
        raise ValueError('Alternating groups need degree >= 3, got {}'.format(
            n))
    gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
    if n >= 4:
        points = range(n) if n % 2 else range(1, n)
        gens.append(Permutation.from_cycles(n, [tuple(points)]))
    return PermGroup(gens, degree=n, name='A{}'.format(n))


def dihedral_group(n):
    """
    Returns the symmetry group of the regular n-gon, of order 2n
    """
    if n < 3:
        raise ValueError('Dihedral groups need n >= 3, got {}'.format(n))
    points = np.arange(n)
    rotation = Permutation((points + 1) % n)
    reflection = Permutation((-points) % n)
    return PermGroup([rotation, reflection], degree=n, name='D{}'.format(n))


def cyclic_group(n):
    """
    Returns the cyclic group of order `n` generated by an n-cycle
    """
    if n < 1:
        raise ValueError('Order must be positive, got {}'.format(n))
    return PermGroup([Permutation((np.arange(n) + 1) % n)], degree=n,
                     name='Z{}'.format(n))


def sl2_group(p):
    """
    Returns SL(2,p) acting on the nonzero vectors of GF(p)^2

    The vector ``(a, b)`` is the point ``a p + b - 1``, so the degree is
    ``p^2 - 1``. The generators are ``[[1, 1], [0, 1]]`` and
    ``[[0, -1], [1, 0]]``.

    Examples
    --------

    >>> G = mupsl.catalog.sl2_group(5)
    >>> G.degree, G.order()
    (24, 120)

    """
    vectors = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]

    def point(v):
        return v[0] * p + v[1] - 1

    def action(matrix):
        (m00, m01), (m10, m11) = matrix
        images = np.zeros(len(vectors), dtype=np.intp)
        for a, b in vectors:
            images[point((a, b))] = point(((m00 * a + m01 * b) % p,
                                           (m10 * a + m11 * b) % p))
        return Permutation(images)

    gens = [action(((1, 1), (0, 1))), action(((0, -1), (1, 0)))]
    return PermGroup(gens, degree=len(vectors), name='SL(2,{})'.format(p))


def direct_product(G, H, name=None):
    """
    Returns the direct product of `G` and `H` on the disjoint union of their
    points

    Examples
    --------

    >>> s3 = mupsl.catalog.get_group('S3')
    >>> z5 = mupsl.catalog.get_group('Z5')
    >>> mupsl.catalog.direct_product(s3, z5).order()
    30

    """
    m, n = G.degree, H.degree
    gens = []
    for g in G.generators:
        images = np.concatenate([g.images, np.arange(m, m + n)])
        gens.append(Permutation(images, check=False))
    for h in H.generators:
        images = np.concatenate([np.arange(m), h.images + m])
        gens.append(Permutation(images, check=False))
    if name is None:
        name = '{}x{}'.format(G, H)
    return PermGroup(gens, degree=m + n, name=name)


_PRODUCTS = (('Z2', 'Z2'), ('Z4', 'Z2'), ('Z3', 'Z3'), ('S3', 'Z5'),
             ('S3', 'S3'), ('A4', 'Z2'), ('A5', 'Z2'), ('A6', 'Z2'))


def _builders():
    builders = OrderedDict()
    for n in range(1, 8):
        builders['S{}'.format(n)] = (symmetric_group, n)
    for n in range(3, 8):
        builders['A{}'.format(n)] = (alternating_group, n)
    for n in range(3, 21):
        builders['D{}'.format(n)] = (dihedral_group, n)
    for n in range(2, 65):
        builders['Z{}'.format(n)] = (cyclic_group, n)
    for p in (3, 5):
        builders['SL(2,{})'.format(p)] = (sl2_group, p)
    for left, right in _PRODUCTS:
        builders['{}x{}'.format(left, right)] = (_product, (left, right))
    for q in range(2, mupsl.config['psl2_q_max'] + 1):
        if is_prime_power(q):
            builders['PSL(2,{})'.format(q)] = (psl2_group, q)
    return builders


def _product(names):
    left, right = names
    return direct_product(get_group(left), get_group(right))


def names():
    """
    Returns the names of the built-in groups in catalog order
    """
    return list(_builders())


def _canonical(name):
    key = str(name).strip().replace(' ', '')
    for candidate in _builders():
        if candidate.lower() == key.lower():
            return candidate
    raise KeyError('Unknown catalog group: {}'.format(name))


@lru_cache(maxsize=None)
def _build(name):
    builder, argument = _builders()[name]
    return builder(argument)


def get_group(name):
    """
    Returns a built-in group by name

    Parameters
    ----------
    name : string
        Catalog name such as ``'S5'``, ``'D7'``, ``'SL(2,5)'``, ``'A5xZ2'``
        or ``'PSL(2,49)'``; case and spaces are ignored

    Returns
    -------
    G : :class:`PermGroup`
        The same object on every call

    Raises
    ------
    KeyError
        When the name is not in the catalog

    Examples
    --------

    >>> mupsl.catalog.get_group('a5').order()
    60

    """
    return _build(_canonical(name))


def catalog_frame():
    """
    Returns the catalog as a DataFrame with columns name, order and degree
    """
    records = []
    for name in names():
        G = get_group(name)
        records.append((name, G.order(), G.degree))
    return pd.records_to_frame(records, columns=['name', 'order', 'degree'])
