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
Plain-text group files

A group file names the degree on its first line and lists one generator per
line in disjoint cycle notation::

    # A5 on five points
    degree 5
    (0 1 2 3 4)
    (0 1 2)

Points are numbered from 0. Lines starting with ``#`` are comments, an
optional ``name`` line names the group, and ``()`` is the identity.
"""

import re

from mupsl.core.group import PermGroup
from mupsl.core.permutation import Permutation
from mupsl.exceptions import GroupFileError


_CYCLE = re.compile(r'\(([^()]*)\)')
_CYCLE_LINE = re.compile(r'^(\s*\([^()]*\)\s*)+$')


def _parse_degree(text, line_number):
    parts = text.split()
    if len(parts) != 2 or not parts[1].isdigit():
        raise GroupFileError('Expected "degree <n>", got {!r}'.format(text),
                             line_number)
    degree = int(parts[1])
    if degree < 1:
        raise GroupFileError('Degree must be positive', line_number)
    return degree


def _parse_cycles(text, degree, line_number):
    if not _CYCLE_LINE.match(text):
        raise GroupFileError(
            'Expected a product of disjoint cycles, got {!r}'.format(text),
            line_number)
    cycles = []
    seen = set()
    for body in _CYCLE.findall(text):
        tokens = body.replace(',', ' ').split()
        cycle = []
        for token in tokens:
            if not token.isdigit():
                raise GroupFileError('Invalid point {!r}'.format(token),
                                     line_number)
            point = int(token)
            if point >= degree:
                raise GroupFileError(
                    'Point {} is out of range for degree {}'.format(
                        point, degree), line_number)
            if point in seen:
                raise GroupFileError(
                    'Point {} appears twice, cycles must be disjoint'.format(
                        point), line_number)
            seen.add(point)
            cycle.append(point)
        cycles.append(tuple(cycle))
    return Permutation.from_cycles(degree, cycles)


def read_group_text(text, name=None):
    """
    Parses the contents of a group file

    Parameters
    ----------
    text : string
        File contents
    name : string, optional
        Group name, overriding a ``name`` line

    Returns
    -------
    G : :class:`PermGroup`
        Group generated by the listed permutations

    Raises
    ------
    GroupFileError
        With the offending line number when a line cannot be parsed

    Examples
    --------

    >>> G = mupsl.read_group_text('degree 3\\n(0 1 2)\\n(0 1)')
    >>> G.order()
    6

    """
    degree = None
    file_name = None
    generators = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        keyword = line.split()[0].lower()
        if degree is None:
            if keyword == 'name':
                parts = line.split(None, 1)
                file_name = parts[1].strip() if len(parts) == 2 else None
                continue
            if keyword != 'degree':
                raise GroupFileError(
                    'The first line must give the degree', line_number)
            degree = _parse_degree(line, line_number)
            continue
        if keyword == 'degree':
            raise GroupFileError('Degree is given twice', line_number)
        if keyword == 'name':
            raise GroupFileError('The name must precede the degree',
                                 line_number)
        generators.append(_parse_cycles(line, degree, line_number))
    if degree is None:
        raise GroupFileError('Group file has no degree line')
    return PermGroup(generators, degree=degree, name=name or file_name)


def read_group_file(path, name=None):
    """
    Reads a group file from `path`
    """
    with open(path) as f:
        return read_group_text(f.read(), name=name)


def write_group_text(G):
    """
    Returns the group file contents of `G`

    Reading the result back gives a group with the same generators.
    """
    lines = []
    if G.name is not None:
        lines.append('name {}'.format(G.name))
    lines.append('degree {}'.format(G.degree))
    for g in G.generators:
        lines.append(str(g))
    return '\n'.join(lines) + '\n'
