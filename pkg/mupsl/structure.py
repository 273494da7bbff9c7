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


from contextlib import contextmanager
from functools import wraps, partial
import threading

import mupsl


class PendingCheck:
    """
    Deferred call of an audit operation collected by a workspace
    """

    def __init__(self, func, args, kwargs):
        self.func = func
        self.args = args
        self.kwargs = kwargs
        self.result = None

    @property
    def name(self):
        return self.func.__name__

    def run(self):
        self.result = self.func(*self.args, **self.kwargs)
        return self.result

    def __repr__(self):
        return 'mupsl.PendingCheck({})'.format(self.name)


def auditable(func=None, standalone=True):
    """
    Marks an audit operation that can be collected by an AuditWorkspace

    Outside a workspace the operation runs immediately. Inside
    ``with AuditWorkspace(...)`` the call is appended to the workspace and a
    :class:`PendingCheck` is returned instead.
    """
    if func is None:
        return partial(auditable, standalone=standalone)

    @wraps(func)
    def wrapper(*args, **kwargs):
        if mupsl.container is not None:
            pending = PendingCheck(func, args, kwargs)
            mupsl.container.append(pending)
            return pending
        return func(*args, **kwargs)
    return wrapper


@contextmanager
def set_container(s):
    original = mupsl.container
    mupsl.container = s
    try:
        yield
    finally:
        mupsl.container = original


_local = threading.local()


def current_cap():
    """
    Returns the enumeration cap in force on the calling thread

    This is the innermost :func:`enumeration_cap` of the thread, or
    ``mupsl.config['enumeration_cap']`` outside any such block.
    """
    cap = getattr(_local, 'cap', None)
    if cap is None:
        return mupsl.config['enumeration_cap']
    return cap


@contextmanager
def enumeration_cap(cap):
    """
    Overrides the enumeration cap of the calling thread inside a ``with``
    block

    The global config is left untouched, so other threads keep their own
    cap. A workspace submitted inside the block runs its checks under it.

    Examples
    --------

    >>> with mupsl.enumeration_cap(100):
    ...     mupsl.catalog.symmetric_group(5).element_array()
    Traceback (most recent call last):
    ...
    mupsl.exceptions.CapExceeded: Group order 120 exceeds the enumeration cap 100

    """
    if isinstance(cap, bool) or not isinstance(cap, int) or cap < 1:
        raise ValueError(
            'Enumeration cap must be a positive integer, got {!r}'.format(cap))
    original = getattr(_local, 'cap', None)
    _local.cap = cap
    try:
        yield
    finally:
        _local.cap = original
