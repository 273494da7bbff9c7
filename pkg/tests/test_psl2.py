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
Unit tests for PSL(2,q) and its analytic element census.
"""

import unittest
from fractions import Fraction

import mupsl
from mupsl.exceptions import (
    MalformedProfile, NotPrimePower, PrimeNotInSpectrum)


F = Fraction

ACCEPTANCE_QS = (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
                 37, 41, 43, 47, 49)


class TestPsl2Group(unittest.TestCase):
    """
    Unit tests for :func:`mupsl.psl2_group`
    """

    def test_orders(self):
        expected = {4: 60, 5: 60, 7: 168, 8: 504, 9: 360, 49: 58800}
        for q, order in expected.items():
            self.assertEqual(mupsl.psl2_order(q), order)
        G = mupsl.psl2_group(7)
        self.assertEqual((G.degree, G.order()), (8, 168))
        self.assertEqual(str(G), 'PSL(2,7)')

    def test_small_fields(self):
        self.assertEqual(mupsl.psl2_group(2).order(), 6)
        self.assertEqual(mupsl.psl2_group(3).order(), 12)

    def test_not_prime_power(self):
        for q in (1, 6, 12, 100):
            with self.assertRaises(NotPrimePower):
                mupsl.psl2_group(q)
        with self.assertRaises(NotPrimePower):
            mupsl.psl2_order(6)

    def test_generators(self):
        gens = mupsl.projective_generators(mupsl.build_field(3, 2))
        self.assertEqual(len(gens), 3)
        self.assertTrue(all(g.degree == 10 for g in gens))
        self.assertEqual(gens[0].order(), 3)
        self.assertEqual(gens[2].order(), 2)

    def test_perfect(self):
        for q in (4, 7, 8, 9):
            self.assertTrue(mupsl.is_perfect(mupsl.psl2_group(q)))


class TestPsl2Census(unittest.TestCase):
    """
    Unit tests for the analytic census and mu-profile of PSL(2,q)
    """

    def test_census_seven(self):
        census = mupsl.element_order_census_analytic(7)
        self.assertEqual(dict(census.counts),
                         {1: 1, 2: 21, 3: 56, 4: 42, 7: 48})
        self.assertEqual(census.total(), 168)
        self.assertEqual(census.singular_count(2), 63)

    def test_census_totals(self):
        for q in ACCEPTANCE_QS:
            p, _ = mupsl.prime_power_decomposition(q)
            census = mupsl.element_order_census_analytic(q)
            self.assertEqual(census.total(), mupsl.psl2_order(q), q)
            self.assertEqual(census.counts[p], q * q - 1, q)

    def test_mu_analytic(self):
        self.assertEqual(mupsl.mu_analytic(4, 2), F(1, 4))
        self.assertEqual(mupsl.mu_analytic(8, 2), F(1, 8))
        self.assertEqual(mupsl.mu_analytic(8, 3), F(4, 9))
        self.assertEqual(mupsl.mu_analytic(8, 7), F(3, 7))
        self.assertEqual(mupsl.mu_analytic(9, 3), F(2, 9))
        self.assertEqual(mupsl.mu_analytic(5, 3), F(1, 3))
        with self.assertRaises(PrimeNotInSpectrum):
            mupsl.mu_analytic(9, 7)

    def test_mu_profile_analytic(self):
        self.assertEqual(mupsl.mu_profile_analytic(9),
                         {2: F(3, 8), 3: F(2, 9), 5: F(2, 5)})
        self.assertEqual(mupsl.mu_profile_analytic(7),
                         {2: F(3, 8), 3: F(1, 3), 7: F(2, 7)})
        self.assertEqual(mupsl.mu_profile_analytic(4),
                         mupsl.mu_profile_analytic(5))

    def test_mu_branch(self):
        self.assertEqual(mupsl.mu_branch(9, 3), 'characteristic')
        self.assertEqual(mupsl.mu_branch(9, 2), 'minus')
        self.assertEqual(mupsl.mu_branch(9, 5), 'plus')
        self.assertEqual(mupsl.mu_branch(8, 3), 'plus')
        self.assertEqual(mupsl.mu_branch(8, 7), 'minus')
        with self.assertRaises(PrimeNotInSpectrum):
            mupsl.mu_branch(9, 7)

    def test_branch_is_total(self):
        for q in ACCEPTANCE_QS:
            for r in mupsl.prime_spectrum(mupsl.psl2_group(q)):
                self.assertIn(mupsl.mu_branch(q, r),
                              ('characteristic', 'minus', 'plus'))

    def test_identify(self):
        self.assertEqual(mupsl.identify_psl2({F(1, 4), F(1, 3), F(2, 5)}),
                         (4, 5))
        self.assertEqual(mupsl.identify_psl2({F(1, 2)}), ())
        self.assertEqual(mupsl.identify_psl2({F(3, 8), F(2, 9), F(2, 5)}),
                         (9,))
        self.assertEqual(mupsl.identify_psl2({F(3, 8), F(1, 3), F(2, 7)}),
                         (7,))
        with self.assertRaises(MalformedProfile):
            mupsl.identify_psl2({F(1, 6)})

    def test_identify_round_trip(self):
        for q in ACCEPTANCE_QS:
            found = mupsl.identify_psl2(mupsl.mu_profile_analytic(q)
                                        .value_set())
            self.assertIn(q, found)

    def test_brute_seven(self):
        report = mupsl.brute_vs_analytic(7)
        self.assertEqual(report.verdict, 'pass')
        self.assertEqual(report.check, 'psl2_brute_vs_analytic/q=007')
        self.assertEqual(dict(report.details['brute_census'].counts),
                         {1: 1, 2: 21, 3: 56, 4: 42, 7: 48})

    def test_brute_sweep(self):
        for q in ACCEPTANCE_QS:
            G = mupsl.psl2_group(q)
            self.assertEqual(mupsl.mu_profile(G),
                             mupsl.mu_profile_analytic(q), q)
            self.assertEqual(mupsl.element_order_census(G, q),
                             mupsl.element_order_census_analytic(q), q)

    def test_p_element_classes(self):
        for q in (4, 8, 16):
            report = mupsl.p_element_class_audit(q)
            self.assertEqual((report.lhs, report.verdict), (1, 'pass'))
        for q in (5, 7, 9, 25):
            report = mupsl.p_element_class_audit(q)
            self.assertEqual((report.lhs, report.verdict), (2, 'pass'))


if __name__ == '__main__':
    unittest.main()
