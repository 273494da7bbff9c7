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

from collections import OrderedDict
from fractions import Fraction
import json

import mupsl
from mupsl.exceptions import AuditFailure
from mupsl.util.package_utils import format_rational


class AuditReport:
    """
    Structured outcome of one replayed check

    Parameters
    ----------
    check : string
        Check identifier, reports are sorted by it
    inputs : dict, optional
        Arguments the check was run with
    lhs : object, optional
        Left-hand side of the asserted relation
    rhs : object, optional
        Right-hand side of the asserted relation
    verdict : string
        One of ``'pass'``, ``'fail'``, ``'vacuous'`` or ``'survivor'``
    source : string, optional
        The relation being asserted, in words
    details : dict, optional
        Additional computed quantities

    Examples
    --------

    >>> r = mupsl.AuditReport('factorial', inputs={'n': 6}, lhs=518400,
    ...                       rhs=470596, verdict='pass',
    ...                       source="(n!)^2 > 4 (n+1)^n")
    >>> r.passed
    True

    Notes
    -----

    Rationals serialize as ``"num/den"`` strings, integers stay bare. The
    JSON field order is always check, inputs, lhs, rhs, verdict, source,
    details.

    """

    VERDICTS = ('pass', 'fail', 'vacuous', 'survivor')

    def __init__(self, check, inputs=None, lhs=None, rhs=None, verdict='pass',
                 source=None, details=None):
        if verdict not in AuditReport.VERDICTS:
            raise ValueError('Unknown verdict: {}'.format(verdict))
        self.check = check
        self.inputs = inputs if inputs is not None else OrderedDict()
        self.lhs = lhs
        self.rhs = rhs
        self.verdict = verdict
        self.source = source
        self.details = details if details is not None else OrderedDict()

    @property
    def passed(self):
        return self.verdict in mupsl.OK_VERDICTS

    @property
    def failed(self):
        return self.verdict == mupsl.FAIL

    def raise_for_verdict(self):
        if self.failed:
            raise AuditFailure('Check {} failed: {} vs {}'.format(
                self.check, _to_plain(self.lhs), _to_plain(self.rhs)))
        return self

    def to_dict(self):
        out = OrderedDict()
        out['check'] = self.check
        out['inputs'] = _to_plain(self.inputs)
        out['lhs'] = _to_plain(self.lhs)
        out['rhs'] = _to_plain(self.rhs)
        out['verdict'] = self.verdict
        out['source'] = self.source
        out['details'] = _to_plain(self.details)
        return out

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    def __str__(self):
        return 'AuditReport[{}: {}]'.format(self.check, self.verdict)

    def __repr__(self):
        return 'mupsl.AuditReport({!r}, verdict={!r})'.format(
            self.check, self.verdict)


def _to_plain(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return value
    if isinstance(value, AuditReport):
        return value.to_dict()
    if hasattr(value, 'to_json'):
        return value.to_json()
    if hasattr(value, 'items'):
        return OrderedDict((str(k), _to_plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) \
            else value
        return [_to_plain(v) for v in items]
    if hasattr(value, 'item'):
        return _to_plain(value.item())
    return str(value)


def combine_verdicts(verdicts):
    """
    Folds several verdicts into one

    Any fail wins; otherwise any survivor; otherwise pass unless every
    verdict is vacuous.
    """
    verdicts = list(verdicts)
    if mupsl.FAIL in verdicts:
        return mupsl.FAIL
    if mupsl.SURVIVOR in verdicts:
        return mupsl.SURVIVOR
    if verdicts and all(v == mupsl.VACUOUS for v in verdicts):
        return mupsl.VACUOUS
    return mupsl.PASS


def verdict_of(holds):
    return mupsl.PASS if holds else mupsl.FAIL
