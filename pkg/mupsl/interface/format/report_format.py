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
Machine-readable output of audit reports and result tables
"""

import json

from mupsl.libs import pd
from mupsl.report import _to_plain


def reports_to_json(reports, indent=2):
    """
    Renders reports as a JSON array in their given order

    Each object keeps the field order check, inputs, lhs, rhs, verdict,
    source, details.
    """
    return json.dumps([r.to_dict() for r in reports], indent=indent)


def reports_to_frame(reports):
    """
    Returns one row per report with columns check, verdict, lhs, rhs and
    source

    Compound values are rendered as compact JSON strings.

    Examples
    --------

    >>> df = mupsl.reports_to_frame([mupsl.factorial_inequality(6)])
    >>> df['verdict'].tolist()
    ['pass']

    """
    records = []
    for r in reports:
        records.append((r.check, r.verdict, _compact(r.lhs), _compact(r.rhs),
                        r.source))
    return pd.records_to_frame(
        records, columns=['check', 'verdict', 'lhs', 'rhs', 'source'])


def _compact(value):
    plain = _to_plain(value)
    if isinstance(plain, (dict, list)):
        return json.dumps(plain, separators=(',', ':'))
    return plain


def frame_to_tsv(frame):
    return frame.to_csv(sep='\t', index=False, lineterminator='\n')


def reports_to_tsv(reports):
    return frame_to_tsv(reports_to_frame(reports))


def format_reports(reports, output_format='json'):
    """
    Renders reports in the requested output format, ``json`` or ``tsv``
    """
    if output_format == 'tsv':
        return reports_to_tsv(reports)
    return reports_to_json(reports)


def document_to_text(document, output_format='json'):
    """
    Renders a result document, a mapping of plain values

    The TSV form has one ``key<TAB>value`` row per top-level entry.
    """
    plain = _to_plain(document)
    if output_format == 'tsv':
        records = [(k, _compact(v)) for k, v in plain.items()]
        return frame_to_tsv(pd.records_to_frame(records,
                                                 columns=['key', 'value']))
    return json.dumps(plain, indent=2)
