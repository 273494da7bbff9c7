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
Unit tests for audit workspaces and the named check registry
"""

import unittest

import mupsl
from mupsl.structure import PendingCheck


class TestAuditWorkspace(unittest.TestCase):
    """
    Unit tests for :class:`mupsl.AuditWorkspace`
    """

    def test_deferred_calls(self):
        with mupsl.AuditWorkspace('factorials', max_workers=2) as w:
            pending = mupsl.factorial_inequality(7)
            mupsl.factorial_inequality(6)
            self.assertIsInstance(pending, PendingCheck)
            self.assertEqual(pending.name, 'factorial_inequality')
            self.assertEqual(len(w.get_elements()), 2)
        self.assertIsNone(mupsl.container)
        reports = w.submit()
        self.assertEqual([r.check for r in reports],
                         ['factorial_inequality/n=006',
                          'factorial_inequality/n=007'])
        self.assertEqual(w.verdict(), 'pass')
        self.assertEqual(w.failures(), [])
        self.assertIs(pending.result, reports[1])

    def test_calls_outside_run_directly(self):
        report = mupsl.factorial_inequality(8)
        self.assertIsInstance(report, mupsl.AuditReport)

    def test_submit_inside_block(self):
        with mupsl.AuditWorkspace('early') as w:
            with self.assertRaises(RuntimeError):
                w.submit()

    def test_verdict_before_submit(self):
        w = mupsl.AuditWorkspace('empty')
        with self.assertRaises(RuntimeError):
            w.verdict()
        self.assertEqual(w.submit(), [])

    def test_append_type(self):
        w = mupsl.AuditWorkspace('typed')
        with self.assertRaises(TypeError):
            w.append(mupsl.factorial_inequality(6))

    def test_flattened_results(self):
        with mupsl.AuditWorkspace('sweep') as w:
            mupsl.subcase_sweep('G2', [2, 3])
        reports = w.submit()
        checks = [r.check for r in reports]
        self.assertEqual(checks, sorted(checks))
        self.assertIn('exponent_inequality/G2', checks)
        self.assertIn('subcase/G2/m=02', checks)

    def test_representation(self):
        w = mupsl.AuditWorkspace('named')
        self.assertEqual(repr(w), 'mupsl.AuditWorkspace(named)')


class TestRunChecks(unittest.TestCase):
    """
    Unit tests for the named check selections
    """

    def test_check_names(self):
        names = mupsl.check_names()
        self.assertEqual(names[0], 'factorial')
        self.assertIn('theorem', names)
        self.assertIn('omega-minus', names)

    def test_unknown_check(self):
        with self.assertRaises(KeyError):
            mupsl.run_checks(['nope'])

    def test_selected_checks(self):
        reports = mupsl.run_checks(['factorial', 'atlas', 'omega-minus'],
                                   n_max=30)
        checks = [r.check for r in reports]
        self.assertEqual(checks, sorted(checks))
        self.assertIn('factorial_inequality/sweep', checks)
        for report in reports:
            self.assertEqual(report.verdict, 'pass', report.check)

    def test_family_sweep(self):
        reports = mupsl.run_checks(subcases=['E6'])
        self.assertEqual([r.verdict for r in reports], ['vacuous'])

    def test_case_numbers(self):
        self.assertEqual(mupsl.family_tags('4.1'), ('PSL',))
        self.assertEqual(mupsl.family_tags('4.3'), ('PSp', 'POmega'))
        self.assertEqual(mupsl.family_tags('4.15'), ('E8',))
        self.assertEqual(mupsl.family_tags('psu'), ('PSU',))
        reports = mupsl.run_checks(subcases=['4.12', 'E6'])
        self.assertEqual([r.check for r in reports],
                         ['exponent_inequality/E6'])
        with self.assertRaises(mupsl.ConstraintViolation):
            mupsl.family_tags('4.16')

    def test_numbered_checks(self):
        self.assertEqual(mupsl.numbered_check('2.11'), 'factorial')
        with self.assertRaises(KeyError):
            mupsl.numbered_check('9.9')
        reports = mupsl.run_checks([mupsl.numbered_check('2.11')],
                                   n_max=200)
        self.assertEqual([(r.check, r.verdict) for r in reports],
                         [('factorial_inequality/sweep', 'pass')])

    def test_suzuki_runs_once(self):
        reports = mupsl.run_checks(['suzuki'], subcases=['2B2'])
        checks = [r.check for r in reports]
        self.assertEqual(checks.count('suzuki'), 1)

    def test_unknown_family(self):
        with self.assertRaises(mupsl.ConstraintViolation):
            mupsl.run_checks(subcases=['X9'])

    def test_no_failures(self):
        reports = mupsl.run_checks(
            ['alternating', 'sylow2', 'sporadic', 'survivors', 'theorem'])
        verdict = mupsl.combine_verdicts(r.verdict for r in reports)
        self.assertEqual(verdict, 'survivor')


if __name__ == '__main__':
    unittest.main()
