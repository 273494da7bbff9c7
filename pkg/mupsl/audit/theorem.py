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

import mupsl
from mupsl.core.group import is_perfect
from mupsl.mu.singular import mu_profile
from mupsl.psl2.census import identify_psl2
from mupsl.psl2.group import psl2_order
from mupsl.report import AuditReport, verdict_of
from mupsl.structure import auditable


@auditable
def mu_equality_theorem_check(G, expect=None):
    """
    Runs the characterization end to end on a concrete group

    Parameters
    ----------
    G : :class:`PermGroup`
        Group within the enumeration cap
    expect : tuple, optional
        Values of q the identification should return; ``()`` when no
        identification is expected

    Returns
    -------
    report : :class:`AuditReport`
        When the mu-profile of `G` is that of some PSL(2,q), passes when
        ``|G| = |PSL(2,q)|`` and `G` is perfect. Without an identification
        the report passes unless `expect` asks for one.

    Raises
    ------
    CapExceeded
        When `G` is larger than the enumeration cap

    Examples
    --------

    >>> r = mupsl.mu_equality_theorem_check(mupsl.psl2_group(7))
    >>> r.lhs, r.verdict
    ((7,), 'pass')
    >>> s5 = mupsl.catalog.get_group('S5')
    >>> mupsl.mu_equality_theorem_check(s5, expect=()).lhs
    ()

    """
    profile = mu_profile(G)
    found = identify_psl2(profile.value_set()) if profile else ()
    details = OrderedDict([('order', G.order()), ('profile', profile)])
    holds = True
    if found:
        order_match = psl2_order(found[0]) == G.order()
        perfect = is_perfect(G)
        details['order_match'] = order_match
        details['perfect'] = perfect
        holds = order_match and perfect
    if expect is not None:
        holds = holds and tuple(found) == tuple(expect)
    return AuditReport(
        'theorem/{}'.format(G),
        inputs=OrderedDict([('group', str(G)), ('expect', expect)]),
        lhs=found, rhs=expect, verdict=verdict_of(holds),
        source='mu(G) = mu(PSL(2,q)) gives |G| = |PSL(2,q)| and G perfect',
        details=details)


@auditable
def check_perfect_below_half(G):
    """
    Checks that `G` is perfect when every mu_r(G) is below 1/2

    The verdict is ``vacuous`` when some mu_r(G) is at least 1/2.

    Examples
    --------

    >>> a5 = mupsl.catalog.get_group('A5')
    >>> mupsl.check_perfect_below_half(a5).verdict
    'pass'
    >>> s4 = mupsl.catalog.get_group('S4')
    >>> mupsl.check_perfect_below_half(s4).verdict
    'vacuous'

    """
    profile = mu_profile(G)
    largest = max(profile.values()) if profile else None
    inputs = OrderedDict([('group', str(G))])
    if largest is None or largest >= Fraction(1, 2):
        return AuditReport(
            'perfect_below_half/{}'.format(G), inputs=inputs, lhs=largest,
            rhs=Fraction(1, 2), verdict=mupsl.VACUOUS,
            source='every mu_r(G) < 1/2 makes G perfect')
    perfect = is_perfect(G)
    return AuditReport(
        'perfect_below_half/{}'.format(G), inputs=inputs, lhs=largest,
        rhs=Fraction(1, 2), verdict=verdict_of(perfect),
        source='every mu_r(G) < 1/2 makes G perfect',
        details=OrderedDict([('perfect', perfect)]))
