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
Unit tests for permutations.
"""

import unittest

import mupsl
from mupsl.exceptions import DegreeError


class TestPermutation(unittest.TestCase):
    """
    Unit tests for :class:`mupsl.Permutation` objects
    """

    def test_from_cycles(self):
        p = mupsl.Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])
        self.assertEqual(p.images.tolist(), [1, 0, 3, 4, 2])
        self.assertEqual(p.cycles(), [(0, 1), (2, 3, 4)])
        self.assertEqual(p.cycle_lengths(), [3, 2])
        self.assertEqual(p.order(), 6)
        self.assertEqual(str(p), '(0 1)(2 3 4)')

    def test_identity(self):
        e = mupsl.Permutation.identity(4)
        self.assertTrue(e.is_identity())
        self.assertEqual(str(e), '()')
        self.assertEqual(e.order(), 1)
        self.assertEqual(e.cycle_lengths(), [1, 1, 1, 1])

    def test_compose_applies_right_factor_first(self):
        a = mupsl.Permutation.from_cycles(3, [(0, 1, 2)])
        b = mupsl.Permutation.from_cycles(3, [(0, 1)])
        self.assertEqual(str(mupsl.compose(a, b)), '(0 2)')
        self.assertEqual(str(b * a), '(1 2)')
        self.assertEqual(a * b, mupsl.compose(a, b))

    def test_inverse_and_powers(self):
        a = mupsl.Permutation([1, 2, 3, 4, 0])
        self.assertTrue((a * a.inverse()).is_identity())
        self.assertTrue((a ** 5).is_identity())
        self.assertEqual(a ** -1, a.inverse())
        self.assertEqual(a ** 2, a * a)
        self.assertEqual(a ** 0, mupsl.Permutation.identity(5))

    def test_call(self):
        a = mupsl.Permutation([2, 0, 1])
        self.assertEqual([a(i) for i in range(3)], [2, 0, 1])

    def test_element_order_is_lcm(self):
        p = mupsl.Permutation.from_cycles(9, [(0, 1, 2, 3), (4, 5, 6, 7, 8)])
        self.assertEqual(mupsl.element_order(p), 20)

    def test_equality_and_hash(self):
        a = mupsl.Permutation([1, 0, 2])
        b = mupsl.Permutation.from_cycles(3, [(0, 1)])
        self.assertEqual(a, b)
        self.assertEqual(len({a, b}), 1)
        self.assertNotEqual(a, mupsl.Permutation([1, 0, 2, 3]))

    def test_invalid_images(self):
        with self.assertRaises(ValueError):
            mupsl.Permutation([0, 0, 1])
        with self.assertRaises(ValueError):
            mupsl.Permutation([])
        with self.assertRaises(ValueError):
            mupsl.Permutation.from_cycles(3, [(0, 3)])
        with self.assertRaises(ValueError):
            mupsl.Permutation.from_cycles(4, [(0, 1), (1, 2)])

    def test_degree_mismatch(self):
        a = mupsl.Permutation([1, 0])
        b = mupsl.Permutation([1, 2, 0])
        with self.assertRaises(DegreeError):
            a * b


if __name__ == '__main__':
    unittest.main()
