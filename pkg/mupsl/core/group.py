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

from collections import namedtuple
import warnings

import mupsl
from mupsl.libs import np
from mupsl.exceptions import CapExceeded, DegreeError, NotAMember, NotNormal
from mupsl.structure import current_cap
from mupsl.util.package_utils import note, p_part
from .permutation import Permutation
from .schreier import StabilizerChain


ConjugacyClass = namedtuple(
    'ConjugacyClass', ['representative', 'size', 'order', 'indices'])


def _to_permutation(g):
    if isinstance(g, Permutation):
        return g
    return Permutation(g)


class PermGroup:
    """
    Creates a permutation group from its generators

    Parameters
    ----------
    generators : list
        Generators as :class:`Permutation` objects or image lists
    degree : int, optional
        Number of points; required when `generators` is empty
    name : string, optional
        Name of the group

    Examples
    --------

    >>> a5 = mupsl.PermGroup([[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]], name='A5')
    >>> a5.order()
    60
    >>> mupsl.prime_spectrum(a5)
    [2, 3, 5]

    Notes
    -----

    The group order comes from a Schreier-Sims stabilizer chain and is
    available for any size. Operations that scan the elements enumerate the
    group first, which is refused with :class:`CapExceeded` when the order
    is larger than :func:`mupsl.current_cap`. All caches are
    filled once and the object is read-only afterwards.

    """

    def __init__(self, generators, degree=None, name=None):
        gens = [_to_permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError('Degree is required for a group without '
                                 'generators')
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeError(
                    'Generator {} has degree {}, expected {}'.format(
                        g, g.degree, degree))
        if not gens:
            gens = [Permutation.identity(degree)]
        self._degree = degree
        self._generators = gens
        self._name = name
        self._chain = None
        self._order = None
        self._elements = None
        self._index = None
        self._orders = None
        self._classes = None

    @property
    def degree(self):
        return self._degree

    @property
    def generators(self):
        if self._generators is None:
            self._generators = self._derive_generators()
        return list(self._generators)

    @property
    def name(self):
        return self._name

    def set_name(self, name):
        self._name = name

    def __str__(self):
        if self._name is not None:
            return self._name
        return 'PermGroup[degree={}]'.format(self._degree)

    def __repr__(self):
        if self._name is not None:
            return 'mupsl.PermGroup({})'.format(self._name)
        return 'mupsl.PermGroup({})'.format(
            ', '.join(str(g) for g in self.generators))

    def _derive_generators(self):
        return [Permutation.identity(self._degree)]

    def _get_chain(self):
        if self._chain is None:
            with mupsl.lock:
                if self._chain is None:
                    self._chain = StabilizerChain(
                        self._degree, [g.images for g in self.generators])
        return self._chain

    def order(self):
        """
        Returns the group order
        """
        if self._order is None:
            self._order = self._get_chain().order()
        return self._order

    def base(self):
        return list(self._get_chain().base)

    def _require_within_cap(self):
        order = self.order()
        cap = current_cap()
        if order > cap:
            raise CapExceeded(order, cap)
        if order >= 1000 and 2 * order >= cap:
            warnings.warn(
                'Enumerating {} elements of {}, close to the cap {}'.format(
                    order, self, cap), UserWarning)

    def element_array(self):
        """
        Returns all elements as rows of a read-only integer array

        Row 0 is the identity; the remaining rows follow the breadth-first
        order over the generators, so the layout is reproducible.
        """
        if self._elements is None:
            self._require_within_cap()
            with mupsl.lock:
                if self._elements is None:
                    self._enumerate()
        return self._elements

    def _enumerate(self):
        identity = np.arange(self._degree)
        rows = [identity]
        index = {identity.tobytes(): 0}
        gens = [g.images for g in self.generators]
        frontier = identity.reshape(1, -1)
        while len(frontier):
            fresh = []
            for g in gens:
                for row in g[frontier]:
                    key = row.tobytes()
                    if key not in index:
                        index[key] = len(rows)
                        rows.append(row)
                        fresh.append(row)
            frontier = np.array(fresh, dtype=np.intp).reshape(-1, self._degree)
        if len(rows) != self.order():
            raise RuntimeError(
                'Enumeration of {} found {} elements, stabilizer chain gives '
                '{}'.format(self, len(rows), self.order()))
        elements = np.array(rows, dtype=np.intp)
        elements.flags.writeable = False
        self._index = index
        self._elements = elements
        note('Enumerated {} elements of {}'.format(len(rows), self), 4)

    def elements(self):
        """
        Yields every element exactly once as a :class:`Permutation`
        """
        for row in self.element_array():
            yield Permutation(row, check=False)

    def index_of(self, g):
        self.element_array()
        try:
            return self._index[_to_permutation(g).key]
        except KeyError:
            raise NotAMember('{} is not an element of {}'.format(g, self))

    def contains(self, g):
        g = _to_permutation(g)
        if g.degree != self._degree:
            return False
        if self._index is None and \
                self.order() > current_cap():
            return self._get_chain().contains(g.images)
        self.element_array()
        return g.key in self._index

    def __contains__(self, g):
        return self.contains(g)

    def element_orders(self):
        """
        Returns the order of every element, aligned with :meth:`element_array`
        """
        if self._orders is None:
            elements = self.element_array()
            with mupsl.lock:
                if self._orders is None:
                    self._orders = _bulk_orders(elements)
        return self._orders

    def conjugacy_classes(self):
        """
        Returns the conjugacy classes sorted by representative

        Each representative is the lexicographically least image sequence in
        its class.
        """
        if self._classes is None:
            elements = self.element_array()
            orders = self.element_orders()
            with mupsl.lock:
                if self._classes is None:
                    self._classes = self._compute_classes(elements, orders)
        return list(self._classes)

    def _compute_classes(self, elements, orders):
        inverses = np.argsort(elements, axis=1)
        assigned = np.zeros(len(elements), dtype=bool)
        classes = []
        for idx in range(len(elements)):
            if assigned[idx]:
                continue
            x = elements[idx]
            conjugates = np.take_along_axis(elements, x[inverses], axis=1)
            members = np.unique(conjugates, axis=0)
            indices = np.array([self._index[row.tobytes()] for row in members],
                               dtype=np.intp)
            assigned[indices] = True
            classes.append(ConjugacyClass(
                representative=Permutation(members[0], check=False),
                size=len(members),
                order=int(orders[idx]),
                indices=indices))
        classes.sort(key=lambda c: c.representative.images.tolist())
        return classes

    def is_trivial(self):
        return self.order() == 1

    def is_abelian(self):
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)


class Subgroup(PermGroup):
    """
    Creates a subgroup of a permutation group

    Parameters
    ----------
    parent : :class:`PermGroup`
        Group containing the subgroup
    generators : list
        Generators, each of which must lie in `parent`
    name : string, optional
        Name of the subgroup

    Examples
    --------

    >>> s3 = mupsl.catalog.get_group('S3')
    >>> a3 = mupsl.Subgroup(s3, [mupsl.Permutation([1, 2, 0])], name='A3')
    >>> mupsl.is_normal(s3, a3)
    True

    """

    def __init__(self, parent, generators, name=None):
        gens = [_to_permutation(g) for g in generators]
        for g in gens:
            if not parent.contains(g):
                raise NotAMember(
                    '{} is not an element of {}'.format(g, parent))
        super().__init__(gens, degree=parent.degree, name=name)
        self.parent = parent

    @classmethod
    def from_indices(cls, parent, indices, name=None):
        """
        Creates the subgroup made of the given rows of the parent elements

        The caller guarantees that the rows form a subgroup.
        """
        indices = np.asarray(indices, dtype=np.intp)
        sub = cls.__new__(cls)
        PermGroup.__init__(sub, [], degree=parent.degree, name=name)
        sub.parent = parent
        sub._generators = None
        elements = np.array(parent.element_array()[indices], dtype=np.intp)
        elements.flags.writeable = False
        sub._elements = elements
        sub._index = {row.tobytes(): i for i, row in enumerate(elements)}
        sub._order = len(elements)
        sub._orders = parent.element_orders()[indices]
        return sub

    @classmethod
    def trivial(cls, parent):
        return cls(parent, [Permutation.identity(parent.degree)],
                   name='1')

    def _derive_generators(self):
        gens = []
        span = {Permutation.identity(self._degree).key}
        for row in self._elements:
            if row.tobytes() in span:
                continue
            gens.append(Permutation(row, check=False))
            closure = PermGroup(gens, degree=self._degree)
            span = set(r.tobytes() for r in closure.element_array())
            if len(span) == self._order:
                break
        return gens or [Permutation.identity(self._degree)]

    def __repr__(self):
        return 'mupsl.Subgroup({}, parent={})'.format(
            self._name or ', '.join(str(g) for g in self.generators),
            self.parent)


def _bulk_orders(elements):
    count, degree = elements.shape
    identity = np.arange(degree)
    orders = np.zeros(count, dtype=np.int64)
    remaining = np.arange(count)
    power = np.array(elements)
    k = 1
    while len(remaining):
        done = np.all(power == identity, axis=1)
        orders[remaining[done]] = k
        remaining = remaining[~done]
        if not len(remaining):
            break
        power = np.take_along_axis(elements[remaining], power[~done], axis=1)
        k += 1
    return orders


def commutator(a, b):
    """Returns a^-1 b^-1 a b"""
    return a.inverse() * b.inverse() * a * b


def group_order(G):
    """
    Returns the exact order of a permutation group

    Examples
    --------

    >>> mupsl.group_order(mupsl.catalog.get_group('S7'))
    5040

    """
    return G.order()


def enumerate_elements(G):
    """
    Yields every element of `G` exactly once

    Raises :class:`CapExceeded` when the group is larger than the cap.
    """
    return G.elements()


def centralizer(G, x):
    """
    Returns the centralizer of `x` in `G` as a :class:`Subgroup`

    Examples
    --------

    >>> s3 = mupsl.catalog.get_group('S3')
    >>> c = mupsl.centralizer(s3, mupsl.Permutation([1, 2, 0]))
    >>> c.order()
    3

    """
    x = _to_permutation(x)
    if not G.contains(x):
        raise NotAMember('{} is not an element of {}'.format(x, G))
    elements = G.element_array()
    images = x.images
    mask = np.all(elements[:, images] == images[elements], axis=1)
    return Subgroup.from_indices(
        G, np.flatnonzero(mask), name='C({})'.format(x))


def center(G):
    """
    Returns the center of `G` as a :class:`Subgroup`
    """
    elements = G.element_array()
    mask = np.ones(len(elements), dtype=bool)
    for s in G.generators:
        images = s.images
        mask &= np.all(elements[:, images] == images[elements], axis=1)
    return Subgroup.from_indices(G, np.flatnonzero(mask),
                                 name='Z({})'.format(G))


def _is_prime_power_of(order, r):
    return order > 1 and p_part(order, r) == order


def conjugacy_class_reps(G, filter_prime=None):
    """
    Returns one representative per conjugacy class

    Parameters
    ----------
    G : :class:`PermGroup`
        Group to scan
    filter_prime : int, optional
        When given, only classes of nontrivial `filter_prime`-elements are
        kept

    Returns
    -------
    reps : list of :class:`Permutation`
        Lexicographically least element of every class, sorted

    Examples
    --------

    >>> a5 = mupsl.catalog.get_group('A5')
    >>> len(mupsl.conjugacy_class_reps(a5))
    5
    >>> len(mupsl.conjugacy_class_reps(a5, filter_prime=5))
    2

    """
    classes = G.conjugacy_classes()
    if filter_prime is not None:
        classes = [c for c in classes
                   if _is_prime_power_of(c.order, filter_prime)]
    return [c.representative for c in classes]


def _order_histogram(G):
    values, counts = np.unique(G.element_orders(), return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def count_solutions_xn(G, n):
    """
    Returns the number of elements `x` of `G` with ``x**n == 1``
    """
    if n < 1:
        raise ValueError('Exponent must be positive, got {}'.format(n))
    return sum(c for o, c in _order_histogram(G).items() if n % o == 0)


def solutions_xn(G, n):
    """
    Returns the rows of :meth:`PermGroup.element_array` solving ``x**n == 1``
    """
    orders = G.element_orders()
    divides = np.array([n % int(o) == 0 for o in orders], dtype=bool)
    return np.flatnonzero(divides)


def is_normal(G, H):
    """
    Checks whether `H` is a normal subgroup of `G`

    Conjugates of the generators of `H` by the generators of `G` are tested
    for membership in `H`.
    """
    for h in H.generators:
        if not G.contains(h):
            raise NotAMember('{} is not an element of {}'.format(h, G))
    for g in G.generators:
        g_inv = g.inverse()
        for h in H.generators:
            if not H.contains(g * h * g_inv):
                return False
    return True


def normal_closure(G, elements, name=None):
    """
    Returns the smallest normal subgroup of `G` containing `elements`
    """
    gens = [e for e in elements if not e.is_identity()]
    if not gens:
        return Subgroup.trivial(G)
    H = Subgroup(G, gens)
    grown = True
    while grown:
        grown = False
        for g in G.generators:
            g_inv = g.inverse()
            for h in H.generators:
                c = g * h * g_inv
                if not H.contains(c):
                    H = Subgroup(G, H.generators + [c])
                    grown = True
                    break
            if grown:
                break
    H.set_name(name)
    return H


def derived_subgroup(G):
    """
    Returns the derived subgroup of `G`

    Computed as the normal closure of the commutators of generator pairs.

    Examples
    --------

    >>> s3 = mupsl.catalog.get_group('S3')
    >>> mupsl.derived_subgroup(s3).order()
    3

    """
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i+1:]]
    return normal_closure(G, comms, name="{}'".format(G))


def is_perfect(G):
    return derived_subgroup(G).order() == G.order()


def quotient_group(G, N):
    """
    Returns the quotient of `G` by the normal subgroup `N`

    The result acts on the left cosets of `N`, so its degree is the index
    of `N` in `G`.

    Examples
    --------

    >>> s3 = mupsl.catalog.get_group('S3')
    >>> a3 = mupsl.derived_subgroup(s3)
    >>> mupsl.quotient_group(s3, a3).order()
    2

    """
    if not is_normal(G, N):
        raise NotNormal('{} is not normal in {}'.format(N, G))
    elements = G.element_array()
    sub_rows = N.element_array()
    coset_of = np.zeros(len(elements), dtype=np.intp)
    assigned = np.zeros(len(elements), dtype=bool)
    reps = []
    for idx in range(len(elements)):
        if assigned[idx]:
            continue
        members = elements[idx][sub_rows]
        ids = [G._index[row.tobytes()] for row in members]
        coset_of[ids] = len(reps)
        assigned[ids] = True
        reps.append(idx)
    gens = []
    for s in G.generators:
        images = [coset_of[G._index[s.images[elements[rep]].tobytes()]]
                  for rep in reps]
        gens.append(Permutation(images, check=False))
    return PermGroup(gens, degree=len(reps), name='{}/{}'.format(G, N))
