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
Deterministic Schreier-Sims construction of a base and strong generating set
"""

from mupsl.libs import np


def _inverse(g):
    inv = np.empty_like(g)
    inv[g] = np.arange(len(g))
    return inv


class StabilizerChain:
    """
    Base and strong generating set of a permutation group

    Parameters
    ----------
    degree : int
        Number of points
    generators : list of :class:`numpy.ndarray`
        Image arrays of the group generators

    Notes
    -----

    A new base point is always the least point moved by the element that
    needs it, so the chain only depends on the generator order.

    Arrays are composed with the right factor applied first, ``a[b]`` is the
    map ``i -> a[b[i]]``.

    """

    def __init__(self, degree, generators):
        self.degree = degree
        self._identity = np.arange(degree)
        self.base = []
        self.strong = [np.asarray(g) for g in generators
                       if not self._is_identity(g)]
        self._levels = []
        if self.strong:
            self._build()

    def _is_identity(self, g):
        return bool(np.all(g == self._identity))

    def _least_moved(self, g):
        return int(np.flatnonzero(g != self._identity)[0])

    def _refresh(self):
        levels = []
        for i, b in enumerate(self.base):
            fixed = self.base[:i]
            gens = [s for s in self.strong if all(s[x] == x for x in fixed)]
            transversal = {b: (self._identity, self._identity)}
            queue = [b]
            for x in queue:
                ux = transversal[x][0]
                for s in gens:
                    y = int(s[x])
                    if y not in transversal:
                        uy = s[ux]
                        transversal[y] = (uy, _inverse(uy))
                        queue.append(y)
            levels.append((gens, transversal, queue))
        self._levels = levels

    def _strip(self, g, start=0):
        for level in range(start, len(self.base)):
            x = int(g[self.base[level]])
            transversal = self._levels[level][1]
            if x not in transversal:
                return g, level
            g = transversal[x][1][g]
        return g, len(self.base)

    def _check_level(self, i):
        gens, transversal, orbit = self._levels[i]
        for x in orbit:
            ux = transversal[x][0]
            for s in gens:
                y = int(s[x])
                schreier = transversal[y][1][s[ux]]
                if self._is_identity(schreier):
                    continue
                h, j = self._strip(schreier, i + 1)
                if j < len(self.base) or not self._is_identity(h):
                    return h, j
        return None

    def _build(self):
        for g in self.strong:
            if all(g[b] == b for b in self.base):
                self.base.append(self._least_moved(g))
        self._refresh()
        i = len(self.base) - 1
        while i >= 0:
            failure = self._check_level(i)
            if failure is None:
                i -= 1
                continue
            h, j = failure
            if j == len(self.base):
                self.base.append(self._least_moved(h))
            self.strong.append(h)
            self._refresh()
            i = j

    def orbit_sizes(self):
        return [len(level[2]) for level in self._levels]

    def order(self):
        """
        Returns the group order as the product of basic orbit lengths
        """
        order = 1
        for size in self.orbit_sizes():
            order *= size
        return order

    def contains(self, g):
        g = np.asarray(g)
        if len(g) != self.degree:
            return False
        h, j = self._strip(g)
        return j == len(self.base) and self._is_identity(h)
