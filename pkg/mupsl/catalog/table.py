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
Normal subgroups of catalog groups
"""

from collections import namedtuple

from mupsl.core.group import Subgroup, center, derived_subgroup
from mupsl.core.permutation import Permutation
from mupsl.libs import np
from mupsl.mu.singular import prime_spectrum
from .groups import get_group


NormalPair = namedtuple('NormalPair', ['group', 'kind', 'argument'])

_PAIRS = (
    NormalPair('S3', 'derived', None),
    NormalPair('S4', 'derived', None),
    NormalPair('S4', 'second derived', None),
    NormalPair('A4', 'derived', None),
    NormalPair('S5', 'derived', None),
    NormalPair('SL(2,3)', 'center', None),
    NormalPair('SL(2,3)', 'derived', None),
    NormalPair('SL(2,5)', 'center', None),
    NormalPair('D4', 'center', None),
    NormalPair('D5', 'derived', None),
    NormalPair('D6', 'center', None),
    NormalPair('Z6', 'power', 2),
    NormalPair('Z12', 'power', 3),
    NormalPair('S3xZ5', 'factor', 0),
    NormalPair('S3xS3', 'factor', 1),
    NormalPair('A4xZ2', 'factor', 1),
    NormalPair('A5xZ2', 'factor', 0),
    NormalPair('A5xZ2', 'factor', 1),
)

_FACTORS = {'S3xZ5': (3, 5), 'S3xS3': (3, 3), 'A4xZ2': (4, 2),
            'A5xZ2': (5, 2)}


def _factor(G, name, index):
    # Generators moving only the points of the chosen factor
    left = _FACTORS[name][0]
    points = np.arange(G.degree)
    own = points < left if index == 0 else points >= left
    gens = [g for g in G.generators
            if np.all(g.images[~own] == points[~own])]
    return Subgroup(G, gens or [Permutation.identity(G.degree)],
                    name='{}[{}]'.format(name, index))


def normal_subgroup(pair):
    """
    Returns the group and the normal subgroup described by a table row
    """
    G = get_group(pair.group)
    if pair.kind == 'derived':
        return G, derived_subgroup(G)
    if pair.kind == 'second derived':
        return G, derived_subgroup(derived_subgroup(G))
    if pair.kind == 'center':
        return G, center(G)
    if pair.kind == 'power':
        return G, Subgroup(G, [g ** pair.argument for g in G.generators],
                           name='{}^{}'.format(G, pair.argument))
    if pair.kind == 'factor':
        return G, _factor(G, pair.group, pair.argument)
    raise ValueError('Unknown normal subgroup kind: {}'.format(pair.kind))


def normal_pairs():
    return list(_PAIRS)


def normal_subgroup_table():
    """
    Returns the ``(G, N, r)`` triples for every table row and every prime
    dividing the order of G

    Examples
    --------

    >>> len(mupsl.catalog.normal_subgroup_table()) >= 20
    True

    """
    triples = []
    for pair in _PAIRS:
        G, N = normal_subgroup(pair)
        for r in prime_spectrum(G):
            triples.append((G, N, r))
    return triples
