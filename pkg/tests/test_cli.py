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
Unit tests for the command line front end
"""

import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

import mupsl
from mupsl.cli import EXIT_CAP, EXIT_FAIL, EXIT_INPUT, EXIT_OK, main


S5_FILE = """degree 5
(0 1)
(0 1 2 3 4)
"""


def run(*argv):
    out = io.StringIO()
    err = io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(list(argv))
    return status, out.getvalue(), err.getvalue()


class TestCommandLine(unittest.TestCase):
    """
    Unit tests for :func:`mupsl.cli.main`
    """

    @classmethod
    def setUpClass(cls):
        cls.tmpdir = tempfile.TemporaryDirectory()

    @classmethod
    def tearDownClass(cls):
        cls.tmpdir.cleanup()

    def write(self, name, text):
        path = os.path.join(self.tmpdir.name, name)
        with open(path, 'w') as f:
            f.write(text)
        return path

    def test_mu_catalog_group(self):
        status, out, _ = run('mu', '--group', 'A5')
        self.assertEqual(status, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data['order'], 60)
        self.assertEqual(data['primes'], [2, 3, 5])
        self.assertEqual(data['mu'], {'2': '1/4', '3': '1/3', '5': '2/5'})
        self.assertEqual(data['order_from_mu'], 60)

    def test_mu_file(self):
        path = self.write('s5.txt', S5_FILE)
        status, out, _ = run('mu', path, '--format', 'tsv')
        self.assertEqual(status, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0].split('\t'), ['prime', 'mu', 't',
                                                'sylow_order'])
        self.assertEqual(lines[1].split('\t')[:2], ['2', '5/8'])
        self.assertEqual(mupsl.config['output_format'], 'json')

    def test_mu_cap(self):
        path = self.write('s5_cap.txt', S5_FILE)
        status, out, err = run('mu', path, '--cap', '100')
        self.assertEqual(status, EXIT_CAP)
        self.assertEqual(out, '')
        self.assertIn('exceeds the enumeration cap 100', err)
        self.assertNotIn('enumeration_cap', mupsl.config.overridden)

    def test_malformed_file(self):
        path = self.write('bad.txt', 'degree 3\n(0 1)\n(1 5)\n')
        status, _, err = run('mu', path)
        self.assertEqual(status, EXIT_INPUT)
        self.assertIn('line 3', err)

    def test_missing_input(self):
        self.assertEqual(run('mu')[0], EXIT_INPUT)
        missing = os.path.join(self.tmpdir.name, 'missing.txt')
        self.assertEqual(run('mu', missing)[0], EXIT_INPUT)
        self.assertEqual(run('mu', '--group', 'M11')[0], EXIT_INPUT)

    def test_invalid_cap(self):
        self.assertEqual(run('mu', '--group', 'A5', '--cap', '0')[0],
                         EXIT_INPUT)

    def test_psl2(self):
        status, out, _ = run('psl2', '7', '--brute')
        self.assertEqual(status, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data['order'], 168)
        self.assertEqual(data['census'],
                         {'1': 1, '2': 21, '3': 56, '4': 42, '7': 48})
        self.assertEqual(data['brute']['verdict'], 'pass')

    def test_psl2_range(self):
        status, out, _ = run('psl2', '2..9')
        self.assertEqual(status, EXIT_OK)
        data = json.loads(out)
        self.assertEqual([d['q'] for d in data['psl2']], [4, 5, 7, 8, 9])

    def test_psl2_invalid(self):
        self.assertEqual(run('psl2', '6')[0], EXIT_INPUT)
        self.assertEqual(run('psl2', '3')[0], EXIT_INPUT)
        self.assertEqual(run('psl2', '9..4')[0], EXIT_INPUT)
        self.assertEqual(run('psl2', 'seven')[0], EXIT_INPUT)

    def test_lie_order(self):
        status, out, _ = run('lie-order', '--family', 'PSL', '--n', '3',
                             '--q0', '2')
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(out)['order'], 168)
        status, out, _ = run('lie-order', 'G2', '--q0', '3')
        self.assertEqual(json.loads(out)['order'], 4245696)
        self.assertEqual(run('lie-order', '2B2', '--q0', '4')[0], EXIT_INPUT)

    def test_identify(self):
        status, out, _ = run('identify', '1/4', '1/3', '2/5')
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(out)['identified'], [4, 5])
        status, out, _ = run('identify', '1/2')
        self.assertEqual(json.loads(out)['identified'], 'none')
        self.assertEqual(run('identify', '0.25')[0], EXIT_INPUT)

    def test_audit(self):
        status, out, _ = run('audit', '--subcase', 'E6')
        self.assertEqual(status, EXIT_OK)
        self.assertEqual([r['verdict'] for r in json.loads(out)],
                         ['vacuous'])
        status, out, _ = run('audit', '--check', 'factorial', '--n-max',
                             '30', '--format', 'tsv')
        self.assertEqual(status, EXIT_OK)
        self.assertIn('factorial_inequality/sweep\tpass', out)

    def test_audit_q0_range(self):
        status, out, _ = run('audit', '--subcase', 'PSL', '--q0-max', '4')
        self.assertEqual(status, EXIT_OK)
        for report in json.loads(out):
            if (report['check'].startswith('subcase/')
                    and report['verdict'] != 'vacuous'):
                q0s = [row['q0'] for row in report['details']['q0']]
                self.assertEqual(q0s, [2, 3, 4])
        self.assertNotIn('q0_range', mupsl.config.overridden)

    def test_audit_invalid(self):
        self.assertEqual(run('audit', '--check', 'nope')[0], EXIT_INPUT)
        self.assertEqual(run('audit', '--subcase', 'X9')[0], EXIT_INPUT)
        self.assertEqual(run('audit')[0], EXIT_INPUT)
        self.assertEqual(run('audit', '--lemma', '9.9')[0], EXIT_INPUT)
        self.assertEqual(run('audit', '--subcase', '4.16')[0], EXIT_INPUT)

    def test_audit_case_numbers(self):
        status, out, _ = run('audit', '--subcase', '4.8', '--q0-max', '9')
        self.assertEqual(status, EXIT_OK)
        checks = [r['check'] for r in json.loads(out)]
        self.assertIn('exponent_inequality/G2', checks)
        self.assertTrue(all(c.endswith('G2') or '/G2/' in c
                            for c in checks))
        status, out, _ = run('audit', '--subcase', '4.12')
        self.assertEqual(status, EXIT_OK)
        reports = json.loads(out)
        self.assertEqual([r['check'] for r in reports],
                         ['exponent_inequality/E6'])
        self.assertEqual(reports[0]['verdict'], 'vacuous')
        self.assertEqual(reports[0]['lhs'], [])
        status, out, _ = run('audit', '--subcase', '4.3')
        self.assertEqual(status, EXIT_OK)
        checks = [r['check'] for r in json.loads(out)]
        self.assertIn('exponent_inequality/PSp', checks)
        self.assertIn('exponent_inequality/POmega', checks)

    def test_audit_lemma(self):
        status, out, _ = run('audit', '--lemma', '2.11', '--n-max', '200')
        self.assertEqual(status, EXIT_OK)
        reports = json.loads(out)
        self.assertEqual([r['check'] for r in reports],
                         ['factorial_inequality/sweep'])
        self.assertEqual(reports[0]['verdict'], 'pass')
        status, out, _ = run('audit', '--lemma', '2.11', '--check',
                             'factorial', '--n-max', '40')
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(len(json.loads(out)), 1)

    def test_audit_all(self):
        status, out, _ = run('audit', '--all')
        self.assertEqual(status, EXIT_OK)
        reports = json.loads(out)
        verdicts = {r['check']: r['verdict'] for r in reports}
        self.assertNotIn('fail', verdicts.values())
        self.assertEqual(verdicts['subcase_survivors'], 'survivor')
        self.assertEqual(verdicts['subcase/POmega+(6)/m=06'], 'vacuous')

    def test_audit_all_repeatable(self):
        first = run('audit', '--all')
        second = run('audit', '--all')
        self.assertEqual(first[0], EXIT_OK)
        self.assertEqual(second[0], EXIT_OK)
        self.assertEqual(first[1].encode(), second[1].encode())

    def test_mu_repeatable(self):
        first = run('mu', '--group', 'A5', '--format', 'tsv')
        second = run('mu', '--group', 'A5', '--format', 'tsv')
        self.assertEqual(first[0], EXIT_OK)
        self.assertEqual(second[0], EXIT_OK)
        self.assertTrue(first[1])
        self.assertEqual(first[1].encode(), second[1].encode())

    def test_catalog(self):
        status, out, _ = run('catalog')
        self.assertEqual(status, EXIT_OK)
        rows = json.loads(out)
        self.assertIn({'name': 'A5', 'order': 60, 'degree': 5}, rows)

    def test_exit_codes(self):
        self.assertEqual((EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP),
                         (0, 1, 2, 3))


if __name__ == '__main__':
    unittest.main()
