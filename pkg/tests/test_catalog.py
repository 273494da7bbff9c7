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
Unit tests for the built-in group catalog
"""

import unittest

import mupsl
from mupsl.catalog import (
    catalog_frame, direct_product, get_group, names, normal_pairs,
    normal_subgroup, normal_subgroup_table, sl2_group)
from mupsl.core.group import is_normal


class TestCatalog(unittest.TestCase):
    """
    Unit tests for :mod:`mupsl.catalog`
    """

    def test_lookup(self):
        self.assertIs(get_group('a5'), get_group('A5'))
        self.assertIs(get_group(' psl(2, 7) '), get_group('PSL(2,7)'))
        self.assertEqual(get_group('a5').order(), 60)
        with self.assertRaises(KeyError):
            get_group('M11')

    def test_names(self):
        catalog = names()
        for name in ('S1', 'S7', 'A3', 'D3', 'D20', 'Z2', 'Z64', 'SL(2,3)',
                     'SL(2,5)', 'Z2xZ2', 'A6xZ2', 'PSL(2,4)', 'PSL(2,49)'):
            self.assertIn(name, catalog)
        self.assertNotIn('PSL(2,6)', catalog)

    def test_dihedral_naming(self):
        self.assertEqual(get_group('D7').order(), 14)
        self.assertEqual(get_group('D7').degree, 7)

    def test_sl2(self):
        G = sl2_group(5)
        self.assertEqual((G.degree, G.order()), (24, 120))
        self.assertEqual(sl2_group(3).order(), 24)

    def test_direct_product(self):
        G = direct_product(get_group('S3'), get_group('Z5'))
        self.assertEqual(G.order(), 30)
        self.assertEqual(G.degree, 8)
        self.assertEqual(str(G), 'S3xZ5')

    def test_frame(self):
        df = catalog_frame()
        self.assertEqual(list(df.columns), ['name', 'order', 'degree'])
        self.assertEqual(len(df), len(names()))
        row = df[df['name'] == 'PSL(2,9)'].iloc[0]
        self.assertEqual(row['order'], 360)


class TestNormalSubgroupTable(unittest.TestCase):
    """
    Unit tests for the table of normal subgroups
    """

    def test_rows_are_normal(self):
        for pair in normal_pairs():
            G, N = normal_subgroup(pair)
            self.assertTrue(is_normal(G, N), pair)
            self.assertEqual(G.order() % N.order(), 0, pair)

    def test_known_rows(self):
        rows = {(p.group, p.kind, p.argument): normal_subgroup(p)[1].order()
                for p in normal_pairs()}
        self.assertEqual(rows[('S4', 'derived', None)], 12)
        self.assertEqual(rows[('S4', 'second derived', None)], 4)
        self.assertEqual(rows[('SL(2,5)', 'center', None)], 2)
        self.assertEqual(rows[('Z12', 'power', 3)], 4)
        self.assertEqual(rows[('A5xZ2', 'factor', 1)], 2)

    def test_triples(self):
        table = normal_subgroup_table()
        self.assertGreaterEqual(len(table), 20)
        for G, N, r in table:
            self.assertEqual(G.order() % r, 0)

    def test_unknown_kind(self):
        pair = mupsl.catalog.NormalPair('S3', 'socle', None)
        with self.assertRaises(ValueError):
            normal_subgroup(pair)


if __name__ == '__main__':
    unittest.main()
