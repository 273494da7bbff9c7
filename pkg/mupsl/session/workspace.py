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

from concurrent.futures import ThreadPoolExecutor

import mupsl
from mupsl.report import AuditReport, combine_verdicts
from mupsl.structure import (
    PendingCheck, current_cap, enumeration_cap, set_container)
from mupsl.util.package_utils import note


class AuditWorkspace:
    """
    Workspace collects audit operations and runs them together

    Parameters
    ----------
    name : string
        Name of the workspace
    max_workers : int, optional
        Worker threads used by :meth:`submit`, defaults to
        ``mupsl.config['max_workers']``

    Examples
    --------

    >>> with mupsl.AuditWorkspace('factorials') as w:
    ...     mupsl.factorial_inequality(7)
    ...     mupsl.factorial_inequality(6)
    >>> [r.check for r in w.submit()]
    ['factorial_inequality/n=006', 'factorial_inequality/n=007']

    Notes
    -----

    Inside the ``with`` block every call of an operation marked with
    :func:`mupsl.structure.auditable` is appended to the workspace and
    returns a :class:`PendingCheck`. Reports returned by :meth:`submit` are
    sorted by check identifier, so the result does not depend on the order
    in which the workers finish.

    """

    def __init__(self, name='audit', max_workers=None):
        self.name = name
        self.max_workers = max_workers
        self._load_workspace_defaults()

    def _load_workspace_defaults(self):
        self._elements = []
        self.reports = None

    def get_elements(self):
        """
        Returns the pending checks in the order they were collected
        """
        return self._elements

    def append(self, element):
        """
        Appends a pending check to the workspace

        Parameters
        ----------
        element : :class:`PendingCheck`
            Deferred call of an audit operation
        """
        if not isinstance(element, PendingCheck):
            raise TypeError('Only pending checks can be added to a workspace')
        self._elements.append(element)

    def __str__(self):
        return 'AuditWorkspace[ID={}]'.format(id(self))

    def __repr__(self):
        return 'mupsl.AuditWorkspace({})'.format(self.name)

    def __enter__(self):
        mupsl.lock.acquire()
        self.original = mupsl.container
        mupsl.container = self
        return self

    def __exit__(self, type, value, traceback):
        mupsl.container = self.original
        mupsl.lock.release()

    def submit(self):
        """
        Runs every pending check and returns the reports sorted by check id

        Operations returning several reports are flattened. Every check
        runs under the enumeration cap of the submitting thread.
        """
        if mupsl.container is self:
            raise RuntimeError(
                'Workspace {} must be submitted after its with block'.format(
                    self.name))
        workers = self.max_workers or mupsl.config['max_workers']
        note('Submitting {} checks of workspace {}'.format(
            len(self._elements), self.name), 3)
        cap = current_cap()

        def run(check):
            with enumeration_cap(cap):
                return check.run()

        with set_container(None):
            with ThreadPoolExecutor(max_workers=workers) as executor:
                results = list(executor.map(run, self._elements))
        reports = []
        for result in results:
            if isinstance(result, AuditReport):
                reports.append(result)
            else:
                reports.extend(result)
        reports.sort(key=lambda r: r.check)
        self.reports = reports
        return reports

    def verdict(self):
        """
        Returns the combined verdict of the submitted reports
        """
        if self.reports is None:
            raise RuntimeError('Workspace {} is not submitted'.format(
                self.name))
        return combine_verdicts(r.verdict for r in self.reports)

    def failures(self):
        return [r for r in self.reports or [] if r.failed]
