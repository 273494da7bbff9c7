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
Unit tests for the replayed arithmetic of the characterization.
"""

import unittest
from fractions import Fraction

import mupsl
from mupsl.catalog import get_group
from mupsl.exceptions import DomainError, NotPrime


F = Fraction


class TestArithmetic(unittest.TestCase):
    """
    Unit tests for the factorial, alternating and Suzuki checks
    """

    def test_factorial_inequality(self):
        report = mupsl.factorial_inequality(6)
        self.assertEqual((report.lhs, report.rhs), (518400, 470596))
        self.assertEqual(report.verdict, 'pass')
        self.assertEqual(report.check, 'factorial_inequality/n=006')
        with self.assertRaises(DomainError):
            mupsl.factorial_inequality(5)

    def test_factorial_sweep(self):
        self.assertEqual(mupsl.factorial_sweep(200).verdict, 'pass')

    def test_alternating_case_scan(self):
        self.assertEqual(mupsl.alternating_case_scan(3, 2).lhs, [6])
        self.assertEqual(mupsl.alternating_case_scan(3, 2).verdict,
                         'survivor')
        self.assertEqual(mupsl.alternating_case_scan(5, 1).lhs, [5])
        self.assertEqual(mupsl.alternating_case_scan(7, 1).lhs, [])
        self.assertEqual(mupsl.alternating_case_scan(7, 1).verdict, 'pass')
        with self.assertRaises(NotPrime):
            mupsl.alternating_case_scan(2, 1)
        with self.assertRaises(NotPrime):
            mupsl.alternating_case_scan(9, 1)

    def test_alternating_survivors(self):
        report = mupsl.alternating_survivors()
        self.assertEqual(report.lhs, [(3, 2, 6), (5, 1, 5)])
        self.assertEqual(report.verdict, 'survivor')

    def test_suzuki(self):
        report = mupsl.suzuki_audit()
        self.assertEqual(report.verdict, 'pass')
        with self.assertRaises(DomainError):
            mupsl.suzuki_audit([0])


class TestScanner(unittest.TestCase):
    """
    Unit tests for the exponent scan and the order comparisons
    """

    def test_printed_lists(self):
        self.assertEqual(len(mupsl.exponent_inequality_solutions('PSL')), 15)
        expected = {'3D4': [3, 6, 12], 'G2': [2, 3, 6], '2G2': [2, 6],
                    'F4': [6, 12], '2F4': [4, 6, 12], '2E6': [6, 18],
                    'E6': [], 'E7': [], 'E8': []}
        for tag, solutions in expected.items():
            self.assertEqual(mupsl.exponent_inequality_solutions(tag),
                             solutions, tag)

    def test_classical_pairs(self):
        psl = mupsl.exponent_inequality_solutions('PSL')
        self.assertIn((3, 3), psl)
        self.assertTrue(all(m > 1 for n, m in psl))
        branches = mupsl.scan_branches('POmega+')
        for n, m in branches['m>2, m!|n, m|2n']:
            self.assertTrue(m > 2 and n % m != 0 and (2 * n) % m == 0)
        branches = mupsl.scan_branches('POmega-')
        for n, m in branches['m>2, m|n']:
            self.assertTrue(m > 2 and n % m == 0)
        self.assertTrue(all(m <= 2 for n, m in branches['m<=2']))
        self.assertEqual(list(mupsl.scan_branches('G2')), ['m>=2', 'm=1'])

    def test_empty_scan_is_vacuous(self):
        report = mupsl.exponent_inequality_report('E8')
        self.assertEqual(report.verdict, 'vacuous')
        self.assertEqual(report.lhs, [])
        self.assertEqual([r.verdict for r in mupsl.subcase_sweep('E8')],
                         ['vacuous'])

    def test_order_comparison(self):
        report = mupsl.subcase_order_comparison('PSL', 3, 3, [2])
        self.assertEqual(report.verdict, 'survivor')
        self.assertEqual(report.check, 'subcase/PSL(3)/m=03')
        self.assertEqual(report.lhs, {2: 168})
        self.assertEqual(report.rhs, {2: 343})
        self.assertEqual(
            mupsl.subcase_order_comparison('G2', None, 2).verdict, 'pass')

    def test_sweeps_never_fail(self):
        for tag in mupsl.lie.TAGS:
            for report in mupsl.subcase_sweep(tag):
                self.assertNotEqual(report.verdict, 'fail', report.check)

    def test_zero_exponent_comparison(self):
        for family, n, m in (('POmega+', 3, 6), ('POmega+', 4, 8),
                             ('POmega-', 3, 3), ('POmega-', 5, 5)):
            report = mupsl.subcase_order_comparison(family, n, m)
            self.assertEqual(report.verdict, 'vacuous', report.check)
            self.assertEqual(report.inputs['exponent'], 0)
            self.assertEqual(report.details['q0'], [])

    def test_survivors(self):
        report = mupsl.subcase_survivors()
        self.assertEqual(report.verdict, 'survivor')
        rows = report.details['survivors']
        self.assertEqual(report.lhs, len(rows))
        outcomes = set(row['outcome'] for row in rows)
        self.assertIn('PSL(3,2) = PSL(2,7)', outcomes)
        self.assertIn('mu_3 exclusion', outcomes)
        for row in rows:
            outcome = row['outcome']
            if outcome == 'PSL(3,2) = PSL(2,7)':
                self.assertEqual((row['family'], row['m'], row['q0']),
                                 ('PSL(3)', 3, 2))
            elif outcome == 'mu_3 exclusion':
                self.assertEqual((row['family'], row['m'], row['q0']),
                                 ('POmega-(4)', 2, 2))
            elif row['family'] == 'PSL(2)':
                self.assertEqual(
                    outcome, 'self-case PSL(2,{})'.format(row['q0']))
            else:
                # POmega-(4,q0) is PSL(2,q0^2)
                self.assertEqual(row['family'], 'POmega-(4)')
                self.assertEqual(
                    outcome, 'self-case PSL(2,{})'.format(row['q0'] ** 2))

    def test_survivors_after_zero_exponent_rows(self):
        with mupsl.AuditWorkspace('survivors') as w:
            mupsl.subcase_survivors([2, 3])
            mupsl.subcase_sweep('POmega+', [2, 3])
        reports = w.submit()
        self.assertNotIn('fail', [r.verdict for r in reports])
        vacuous = [r.check for r in reports if r.verdict == 'vacuous']
        self.assertIn('subcase/POmega+(6)/m=06', vacuous)

    def test_omega_minus_exclusion(self):
        report = mupsl.mu_omega_minus_exclusion()
        self.assertEqual((report.lhs, report.rhs), (F(1, 3), F(2, 9)))
        self.assertEqual(report.verdict, 'pass')


class TestClassificationData(unittest.TestCase):
    """
    Unit tests for the abelian Sylow 2-subgroup and sporadic checks
    """

    def test_ree(self):
        for t in (1, 2, 3):
            self.assertEqual(mupsl.ree_mu2(t), F(3, 8))

    def test_abelian_sylow2(self):
        report = mupsl.abelian_sylow2_audit([2, 3])
        self.assertEqual(dict(report.lhs),
                         {2: ['PSL(2,q1), q1 = 3,5 mod 8', 'PSL(2,4)'],
                          3: ['PSL(2,8)']})
        self.assertEqual(mupsl.abelian_sylow2_audit().verdict, 'pass')
        with self.assertRaises(DomainError):
            mupsl.abelian_sylow2_audit([1])

    def test_sporadic_table(self):
        table = mupsl.sporadic_table()
        self.assertEqual(len(table), 27)
        m11 = mupsl.SporadicEntry('M11', 7920, {2: 4, 3: 2, 5: 1, 11: 1})
        self.assertEqual((m11.largest_sylow, m11.largest_odd_sylow),
                         (16, 11))

    def test_sporadic_orders(self):
        report = mupsl.sporadic_order_audit()
        self.assertEqual(report.verdict, 'pass')
        self.assertEqual(report.details['raw_failures'][:3],
                         ['M12', 'M22', 'J2'])
        self.assertEqual(report.details['odd_failures'], [])

    def test_atlas_constants(self):
        self.assertEqual(mupsl.tits_family_mu3(1), F(86, 243))
        self.assertEqual(mupsl.atlas_constants_audit().verdict, 'pass')
        with self.assertRaises(DomainError):
            mupsl.tits_family_mu3(0)


class TestTheorem(unittest.TestCase):
    """
    End-to-end checks on concrete groups
    """

    def test_psl2_groups(self):
        for q in (4, 5, 7, 8, 9, 11, 13):
            expect = (4, 5) if q in (4, 5) else (q,)
            report = mupsl.mu_equality_theorem_check(mupsl.psl2_group(q),
                                                     expect=expect)
            self.assertEqual(report.verdict, 'pass', q)
            self.assertTrue(report.details['perfect'])
            self.assertTrue(report.details['order_match'])

    def test_non_examples(self):
        for name in ('S5', 'S6', 'SL(2,5)', 'A6xZ2'):
            report = mupsl.mu_equality_theorem_check(get_group(name),
                                                     expect=())
            self.assertEqual(report.lhs, (), name)
            self.assertEqual(report.verdict, 'pass', name)

    def test_wrong_expectation_fails(self):
        report = mupsl.mu_equality_theorem_check(mupsl.psl2_group(7),
                                                 expect=(8,))
        self.assertEqual(report.verdict, 'fail')
        with self.assertRaises(mupsl.AuditFailure):
            report.raise_for_verdict()

    def test_perfect_below_half(self):
        self.assertEqual(
            mupsl.check_perfect_below_half(get_group('A5')).verdict, 'pass')
        self.assertEqual(
            mupsl.check_perfect_below_half(get_group('S4')).verdict,
            'vacuous')


if __name__ == '__main__':
    unittest.main()
