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
Unit tests for finite field tables.
"""

import unittest

import mupsl
from mupsl.exceptions import BudgetExceeded, DomainError, NotPrime
from mupsl.libs import np


class TestFieldTable(unittest.TestCase):
    """
    Unit tests for :func:`mupsl.build_field`
    """

    def test_least_irreducible(self):
        self.assertEqual(mupsl.least_irreducible(2, 2), [1, 1, 1])
        self.assertEqual(mupsl.least_irreducible(2, 3), [1, 0, 1, 1])
        self.assertEqual(mupsl.least_irreducible(2, 4), [1, 0, 0, 1, 1])
        self.assertEqual(mupsl.least_irreducible(3, 2), [1, 0, 1])

    def test_is_irreducible(self):
        self.assertTrue(mupsl.is_irreducible([1, 1, 1], 2))
        self.assertFalse(mupsl.is_irreducible([1, 0, 1], 2))
        self.assertFalse(mupsl.is_irreducible([1, 0, 0, 1], 2))
        self.assertTrue(mupsl.is_irreducible([1, 0, 1], 7))

    def test_prime_field(self):
        F = mupsl.build_field(5, 1)
        self.assertEqual(F.q, 5)
        self.assertEqual(F.primitive_element, 2)
        self.assertEqual(int(F.mul(3, 4)), 2)
        self.assertEqual(int(F.add(3, 4)), 2)
        self.assertEqual(int(F.inv(2)), 3)

    def test_extension_field(self):
        F = mupsl.build_field(2, 3)
        self.assertEqual(F.q, 8)
        self.assertEqual(F.modulus_str(), 'x^3 + x + 1')
        self.assertEqual(F.primitive_element, 2)
        self.assertEqual(str(F), 'GF(8)')

    def test_arithmetic_tables(self):
        for p, f in ((2, 2), (2, 4), (3, 2), (5, 2), (7, 2)):
            F = mupsl.build_field(p, f)
            units = np.arange(1, F.q)
            self.assertTrue(np.all(F.mul(units, F.inv(units)) == 1))
            self.assertTrue(np.all(F.add(units, F.neg(units)) == 0))
            self.assertTrue(np.all(F.sub(units, units) == 0))
            self.assertEqual(F.element_order(F.primitive_element), F.q - 1)
            self.assertEqual(F.power(F.primitive_element, F.q - 1), 1)
            self.assertEqual(len(set(F.exp.tolist())), F.q - 1)

    def test_characteristic_two_addition(self):
        F = mupsl.build_field(2, 4)
        a = np.arange(16)
        self.assertTrue(np.all(F.add(a, a) == 0))

    def test_errors(self):
        with self.assertRaises(NotPrime):
            mupsl.build_field(4, 1)
        with self.assertRaises(DomainError):
            mupsl.build_field(2, 0)
        with self.assertRaises(ZeroDivisionError):
            mupsl.build_field(3, 2).inv(0)

    def test_budget(self):
        mupsl.config['field_budget'] = 64
        try:
            with self.assertRaises(BudgetExceeded):
                mupsl.build_field(2, 7)
            with self.assertRaises(BudgetExceeded):
                mupsl.psl2_group(67)
        finally:
            del mupsl.config['field_budget']


if __name__ == '__main__':
    unittest.main()
