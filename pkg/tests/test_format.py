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
Unit tests for group files and report output
"""

import json
import os
import tempfile
import unittest
from fractions import Fraction

import mupsl
from mupsl.exceptions import GroupFileError


A5_FILE = """# A5 on five points
name A5
degree 5
(0 1 2 3 4)
(0 1 2)  # a 3-cycle
"""


class TestGroupFormat(unittest.TestCase):
    """
    Unit tests for reading and writing group files
    """

    def test_read(self):
        G = mupsl.read_group_text(A5_FILE)
        self.assertEqual(G.order(), 60)
        self.assertEqual(G.degree, 5)
        self.assertEqual(str(G), 'A5')
        self.assertEqual(str(mupsl.read_group_text(A5_FILE, name='G')), 'G')

    def test_identity_and_commas(self):
        G = mupsl.read_group_text('degree 4\n()\n(0, 1)(2, 3)\n')
        self.assertEqual(G.order(), 2)
        trivial = mupsl.read_group_text('degree 3\n')
        self.assertEqual(trivial.order(), 1)

    def test_write_then_read(self):
        G = mupsl.catalog.get_group('D5')
        text = mupsl.write_group_text(G)
        self.assertTrue(text.startswith('name D5\ndegree 5\n'))
        H = mupsl.read_group_text(text)
        self.assertEqual(H.generators, G.generators)

    def test_errors(self):
        cases = [
            ('(0 1)\n', 1),
            ('degree 3\n(0 3)\n', 2),
            ('degree 3\n(0 1)(1 2)\n', 2),
            ('# c\ndegree 3\n(0 1 2)\ndegree 4\n', 4),
            ('degree 3\n(0 1\n', 2),
            ('degree 3\n(0 x)\n', 2),
            ('degree three\n', 1),
            ('degree 3\nname G\n', 2),
        ]
        for text, line_number in cases:
            with self.assertRaises(GroupFileError) as cm:
                mupsl.read_group_text(text)
            self.assertEqual(cm.exception.line_number, line_number, text)
            self.assertTrue(str(cm.exception).startswith(
                'line {}: '.format(line_number)), text)
        with self.assertRaises(GroupFileError) as cm:
            mupsl.read_group_text('# only a comment\n')
        self.assertIsNone(cm.exception.line_number)

    def test_read_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, 'a5.txt')
            with open(path, 'w') as f:
                f.write(A5_FILE)
            self.assertEqual(mupsl.read_group_file(path).order(), 60)


class TestReportFormat(unittest.TestCase):
    """
    Unit tests for JSON and TSV rendering of reports
    """

    def setUp(self):
        self.reports = [mupsl.factorial_inequality(6),
                        mupsl.mu_omega_minus_exclusion()]

    def test_json(self):
        data = json.loads(mupsl.reports_to_json(self.reports))
        self.assertEqual(len(data), 2)
        self.assertEqual(list(data[0]), ['check', 'inputs', 'lhs', 'rhs',
                                         'verdict', 'source', 'details'])
        self.assertEqual(data[0]['lhs'], 518400)
        self.assertEqual(data[1]['lhs'], '1/3')
        self.assertEqual(data[1]['rhs'], '2/9')

    def test_frame(self):
        df = mupsl.reports_to_frame(self.reports)
        self.assertEqual(list(df.columns),
                         ['check', 'verdict', 'lhs', 'rhs', 'source'])
        self.assertEqual(df['verdict'].tolist(), ['pass', 'pass'])

    def test_tsv(self):
        text = mupsl.format_reports(self.reports, 'tsv')
        lines = text.splitlines()
        self.assertEqual(lines[0].split('\t'),
                         ['check', 'verdict', 'lhs', 'rhs', 'source'])
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith('factorial_inequality/n=006\t'))

    def test_document(self):
        document = {'q': 7, 'mu': mupsl.mu_profile_analytic(7)}
        data = json.loads(mupsl.document_to_text(document))
        self.assertEqual(data['mu'], {'2': '3/8', '3': '1/3', '7': '2/7'})
        text = mupsl.document_to_text(document, 'tsv')
        self.assertEqual(text.splitlines()[0], 'key\tvalue')
        self.assertIn('q\t7', text.splitlines())

    def test_rationals(self):
        self.assertEqual(mupsl.format_rational(Fraction(3, 1)), '3')
        self.assertEqual(mupsl.format_rational(Fraction(6, 8)), '3/4')
        self.assertEqual(mupsl.parse_rational(' 2/6 '), Fraction(1, 3))
        for text in ('0.5', '1e3', ''):
            with self.assertRaises(ValueError):
                mupsl.parse_rational(text)


if __name__ == '__main__':
    unittest.main()
