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
Simple groups with an abelian Sylow 2-subgroup against mu_2 = 1/2^f
"""

from collections import OrderedDict
from fractions import Fraction

import mupsl
from mupsl.exceptions import DomainError
from mupsl.psl2.census import mu_analytic
from mupsl.report import AuditReport, verdict_of
from mupsl.structure import auditable
from mupsl.util.package_utils import p_part


ODD_CANDIDATE = 'PSL(2,q1), q1 = 3,5 mod 8'
J1 = 'J1'
REE = '2G2(3^(2t+1))'

# q1 = 3 or 5 mod 8 with PSL(2,q1) simple
_ODD_SAMPLES = (5, 11, 13, 19)
_REE_SAMPLES = (1, 2, 3)


def _even_candidate(k):
    return 'PSL(2,{})'.format(2 ** k)


def ree_mu2(t):
    """
    Returns ``5/12 - 1/(6 (3^(2t+1) + 1)_2)``, mu_2 of the Ree group
    ``2G2(3^(2t+1))``

    Examples
    --------

    >>> mupsl.ree_mu2(1)
    Fraction(3, 8)

    """
    if t < 1:
        raise DomainError('Ree parameter t must be >= 1, got {}'.format(t))
    return Fraction(5, 12) - Fraction(1, 6 * p_part(3 ** (2 * t + 1) + 1, 2))


def walter_candidates(k_max):
    """
    Returns mu_2 of every candidate with an abelian Sylow 2-subgroup

    Returns
    -------
    candidates : OrderedDict
        Candidate name to its list of mu_2 values over the sampled
        parameters; PSL(2,2^k) appears for ``2 <= k <= k_max``
    """
    candidates = OrderedDict()
    candidates[ODD_CANDIDATE] = [mu_analytic(q1, 2) for q1 in _ODD_SAMPLES]
    for k in range(2, k_max + 1):
        candidates[_even_candidate(k)] = [mu_analytic(2 ** k, 2)]
    candidates[J1] = [Fraction(3, 8)]
    candidates[REE] = [ree_mu2(t) for t in _REE_SAMPLES]
    return candidates


def _expected_matches(f):
    if f == 2:
        return [ODD_CANDIDATE, _even_candidate(2)]
    return [_even_candidate(f)]


@auditable
def abelian_sylow2_audit(f_range=None):
    """
    Matches ``mu_2 = 1/2^f`` against the groups with an abelian Sylow
    2-subgroup

    Parameters
    ----------
    f_range : iterable, optional
        Exponents ``f >= 2``, ``mupsl.config['sylow2_f_range']`` by default

    Returns
    -------
    report : :class:`AuditReport`
        Passes when, for every f, only PSL(2,2^f) matches, and for
        ``f = 2`` also the odd PSL(2,q1) with ``mu_2 = 1/4``, which is the
        profile shared by PSL(2,4) and PSL(2,5)

    Examples
    --------

    >>> r = mupsl.abelian_sylow2_audit([2, 3])
    >>> dict(r.lhs)
    {2: ['PSL(2,q1), q1 = 3,5 mod 8', 'PSL(2,4)'], 3: ['PSL(2,8)']}

    """
    if f_range is None:
        f_range = mupsl.config['sylow2_f_range']
    f_range = list(f_range)
    for f in f_range:
        if f < 2:
            raise DomainError(
                'Sylow exponent f must be >= 2, got {}'.format(f))
    candidates = walter_candidates(max(f_range) + 1)
    consistent = all(len(set(values)) == 1 for values in candidates.values())
    matches = OrderedDict()
    expected = OrderedDict()
    for f in f_range:
        target = Fraction(1, 2 ** f)
        matches[f] = [name for name, values in candidates.items()
                      if values[0] == target]
        expected[f] = _expected_matches(f)
    return AuditReport(
        'abelian_sylow2',
        inputs=OrderedDict([('f_range', f_range)]),
        lhs=matches, rhs=expected,
        verdict=verdict_of(consistent and matches == expected),
        source='mu_2 = 1/2^f singles out PSL(2,2^f)',
        details=OrderedDict([
            ('candidates', OrderedDict(
                (name, values[0]) for name, values in candidates.items())),
            ('degenerate', 2 in f_range),
            ('samples_consistent', consistent)]))
