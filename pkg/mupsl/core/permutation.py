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

from functools import reduce

from sympy import ilcm

from mupsl.libs import np
from mupsl.exceptions import DegreeError


class Permutation:
    """
    Creates a permutation of the points 0, ..., degree - 1

    Parameters
    ----------
    images : list or :class:`numpy.ndarray`
        Image of every point, point `i` is mapped to ``images[i]``

    Examples
    --------

    >>> a = mupsl.Permutation([1, 2, 0])
    >>> print(a)
    (0 1 2)
    >>> a.degree
    3

    >>> b = mupsl.Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])
    >>> print(b.order())
    6

    Notes
    -----

    Products apply the right-hand factor first: ``a * b`` maps `i` to
    ``a(b(i))``.

    """

    __slots__ = ('_images', '_key')

    def __init__(self, images, check=True):
        images = np.array(images, dtype=np.intp)
        if images.ndim != 1 or len(images) == 0:
            raise ValueError('Permutation needs a nonempty list of images')
        if check and not np.array_equal(
                np.sort(images), np.arange(len(images))):
            raise ValueError('{} is not a permutation'.format(images.tolist()))
        images.flags.writeable = False
        self._images = images
        self._key = images.tobytes()

    @classmethod
    def identity(cls, degree):
        return cls(np.arange(degree), check=False)

    @classmethod
    def from_cycles(cls, degree, cycles):
        """
        Creates a permutation from disjoint cycles

        Parameters
        ----------
        degree : int
            Number of points
        cycles : list of tuple
            Cycles, each a sequence of distinct points
        """
        images = np.arange(degree)
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if point < 0 or point >= degree:
                    raise ValueError(
                        'Point {} is out of range for degree {}'.format(
                            point, degree))
                if point in seen:
                    raise ValueError(
                        'Point {} appears in more than one cycle'.format(
                            point))
                seen.add(point)
            for i, j in zip(cycle, cycle[1:]):
                images[i] = j
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images, check=False)

    @property
    def degree(self):
        return len(self._images)

    @property
    def images(self):
        return self._images

    @property
    def key(self):
        return self._key

    def __call__(self, point):
        return int(self._images[point])

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def inverse(self):
        inv = np.empty_like(self._images)
        inv[self._images] = np.arange(self.degree)
        return Permutation(inv, check=False)

    def is_identity(self):
        return bool(np.all(self._images == np.arange(self.degree)))

    def cycles(self):
        """
        Returns the nontrivial cycles, each starting at its least point
        """
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self._images[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = int(self._images[i])
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = int(self._images[j])
            out.append(tuple(cycle))
        return out

    def cycle_lengths(self):
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return sorted(lengths + [1] * fixed, reverse=True)

    def order(self):
        return element_order(self)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return self._images.tolist() < other._images.tolist()

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('({})'.format(' '.join(map(str, c))) for c in cycles)

    def __repr__(self):
        return 'mupsl.Permutation({})'.format(self._images.tolist())


def compose(a, b):
    """
    Multiplies two permutations, applying `b` first

    Parameters
    ----------
    a : :class:`Permutation`
        Permutation applied second
    b : :class:`Permutation`
        Permutation applied first

    Returns
    -------
    product : :class:`Permutation`
        The map ``i -> a(b(i))``

    Examples
    --------

    >>> a = mupsl.Permutation.from_cycles(3, [(0, 1, 2)])
    >>> b = mupsl.Permutation.from_cycles(3, [(0, 1)])
    >>> print(mupsl.compose(a, b))
    (0 2)

    """
    if a.degree != b.degree:
        raise DegreeError(
            'Cannot compose permutations of degrees {} and {}'.format(
                a.degree, b.degree))
    return Permutation(a.images[b.images], check=False)


def element_order(a):
    """
    Returns the order of a permutation, the lcm of its cycle lengths
    """
    return reduce(ilcm, (len(c) for c in a.cycles()), 1)
