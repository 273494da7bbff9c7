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
Integer inequalities of the alternating and Suzuki cases
"""

from collections import OrderedDict
from math import factorial, gcd

import mupsl
from mupsl.exceptions import DomainError, NotPrime
from mupsl.psl2.group import psl2_order
from mupsl.report import AuditReport, combine_verdicts, verdict_of
from mupsl.structure import auditable, set_container
from mupsl.util.package_utils import note, p_part, require_prime


# (n, q) with A_n isomorphic to PSL(2,q)
_ALTERNATING_ISOMORPHISMS = {(5, 4), (5, 5), (6, 9)}


@auditable
def factorial_inequality(n):
    """
    Checks ``(n!)^2 > 4(n + 1)^n``, the squared form of
    ``n! > 2(n + 1)^(n/2)``

    Raises
    ------
    DomainError
        When ``n < 6``

    Examples
    --------

    >>> r = mupsl.factorial_inequality(6)
    >>> r.lhs, r.rhs
    (518400, 470596)

    """
    if n < 6:
        raise DomainError(
            'Factorial inequality needs n >= 6, got {}'.format(n))
    lhs = factorial(n) ** 2
    rhs = 4 * (n + 1) ** n
    return AuditReport(
        'factorial_inequality/n={:03d}'.format(n),
        inputs=OrderedDict([('n', n)]), lhs=lhs, rhs=rhs,
        verdict=verdict_of(lhs > rhs), source='(n!)^2 > 4(n + 1)^n')


@auditable
def factorial_sweep(n_max=None):
    """
    Checks the factorial inequality for every n from 6 to `n_max`

    The default upper end is ``mupsl.config['factorial_n_max']``.
    """
    if n_max is None:
        n_max = mupsl.config['factorial_n_max']
    if n_max < 6:
        raise DomainError('Sweep needs n_max >= 6, got {}'.format(n_max))
    failing = []
    square = factorial(5) ** 2
    for n in range(6, n_max + 1):
        square *= n * n
        if square <= 4 * (n + 1) ** n:
            failing.append(n)
    return AuditReport(
        'factorial_inequality/sweep',
        inputs=OrderedDict([('n_min', 6), ('n_max', n_max)]),
        lhs=n_max - 5 - len(failing), rhs=n_max - 5,
        verdict=verdict_of(not failing), source='(n!)^2 > 4(n + 1)^n',
        details=OrderedDict([('failing', failing)]))


def _alternating_candidates(p, f):
    # |A_n|_p = |n!|_p for odd p, and it never decreases in n
    target = p ** f
    half = factorial(5) // 2
    n = 5
    while True:
        part = p_part(half, p)
        if part > target:
            return
        if part == target:
            yield n, half
        n += 1
        half *= n


@auditable
def alternating_case_scan(p, f):
    """
    Looks for alternating groups A_n with the Sylow p-subgroup of
    PSL(2,p^f)

    Parameters
    ----------
    p : int
        Odd prime
    f : int
        Positive exponent

    Returns
    -------
    report : :class:`AuditReport`
        The candidate degrees are the ``n >= 5`` with ``|A_n|_p = p^f``; a
        candidate survives when ``|A_n|`` divides ``|PSL(2,p^f)|``. Each
        row also reports ``(n!/2)^2 > (pf + 1)^(pf)`` for ``n >= 6``.
        Survivors are reported with the ``survivor`` verdict when A_n is
        isomorphic to PSL(2,p^f) and fail otherwise.

    Raises
    ------
    NotPrime
        When `p` is not an odd prime

    Examples
    --------

    >>> mupsl.alternating_case_scan(3, 2).lhs
    [6]
    >>> mupsl.alternating_case_scan(7, 1).lhs
    []

    """
    require_prime(p)
    if p < 3:
        raise NotPrime('Alternating scan needs an odd prime, got {}'.format(p))
    if f < 1:
        raise DomainError('Exponent f must be positive, got {}'.format(f))
    q = p ** f
    target = psl2_order(q)
    rows = []
    survivors = []
    for n, half in _alternating_candidates(p, f):
        row = OrderedDict([('n', n), ('order', half)])
        row['divides'] = target % half == 0
        if n >= 6:
            row['size_bound'] = half * half > (p * f + 1) ** (p * f)
        rows.append(row)
        if row['divides']:
            survivors.append(n)
    if not survivors:
        verdict = mupsl.PASS
    elif all((n, q) in _ALTERNATING_ISOMORPHISMS for n in survivors):
        verdict = mupsl.SURVIVOR
    else:
        verdict = mupsl.FAIL
    return AuditReport(
        'alternating_scan/p={:02d}/f={}'.format(p, f),
        inputs=OrderedDict([('p', p), ('f', f)]),
        lhs=survivors, rhs=target, verdict=verdict,
        source='|A_n| divides |PSL(2,p^f)| with |A_n|_p = p^f',
        details=OrderedDict([('candidates', rows)]))


@auditable
def alternating_survivors(primes=None, f_max=None):
    """
    Collects the surviving ``(p, f, n)`` of the alternating scan

    Defaults come from ``mupsl.config['alternating_primes']`` and
    ``mupsl.config['alternating_f_max']``.

    Examples
    --------

    >>> mupsl.alternating_survivors().lhs
    [(3, 2, 6), (5, 1, 5)]

    """
    if primes is None:
        primes = mupsl.config['alternating_primes']
    if f_max is None:
        f_max = mupsl.config['alternating_f_max']
    survivors = []
    verdicts = []
    with set_container(None):
        for p in primes:
            for f in range(1, f_max + 1):
                report = alternating_case_scan(p, f)
                verdicts.append(report.verdict)
                survivors.extend((p, f, n) for n in report.lhs)
    note('Alternating scan left {} survivors'.format(len(survivors)), 4)
    return AuditReport(
        'alternating_scan/summary',
        inputs=OrderedDict([('primes', list(primes)), ('f_max', f_max)]),
        lhs=survivors, rhs=None, verdict=combine_verdicts(verdicts),
        source='A_n with the p-part of PSL(2,p^f) is A_5 or A_6')


@auditable
def suzuki_audit(s_range=None):
    """
    Checks ``gcd(q0 - 1, q0^2 + 2) = 1`` and ``5 q0^2 > q0^2 + 6`` for
    ``q0 = 2^(2s + 1)``

    The second inequality is ``q0^2 > (q0^2 + 1)/5 + 1`` with the
    denominator cleared. Defaults to ``mupsl.config['suzuki_s_range']``.

    Examples
    --------

    >>> mupsl.suzuki_audit([1, 2]).verdict
    'pass'

    """
    if s_range is None:
        s_range = mupsl.config['suzuki_s_range']
    rows = []
    holds = True
    for s in s_range:
        if s < 1:
            raise DomainError('Suzuki parameter s must be >= 1, got {}'.format(
                s))
        q0 = 2 ** (2 * s + 1)
        divisor = gcd(q0 - 1, q0 * q0 + 2)
        size = 5 * q0 * q0 > q0 * q0 + 6
        rows.append(OrderedDict([('s', s), ('q0', q0), ('gcd', divisor),
                                 ('size_bound', size)]))
        holds = holds and divisor == 1 and size
    return AuditReport(
        'suzuki',
        inputs=OrderedDict([('s_range', list(s_range))]),
        lhs=[r['gcd'] for r in rows], rhs=1, verdict=verdict_of(holds),
        source='gcd(q0 - 1, q0^2 + 2) = 1 and q0^2 > (q0^2 + 1)/5 + 1',
        details=OrderedDict([('rows', rows)]))
