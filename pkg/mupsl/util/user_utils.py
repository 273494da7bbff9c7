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
User accessible utility functions
"""

import mupsl
from mupsl.libs import pd
from .package_utils import format_rational


def reset():
    """
    Resets package configs
    """
    mupsl.config.reset()


def dict_to_frame(dictobj, cols=None):
    """
    Converts dictionaries to DataFrame objects for pretty printing

    Parameters
    ----------
    dictobj : dict
        Dictionary to be converted
    cols : list, optional
        Column names

    Returns
    -------
    frobj : DataFrame
        DataFrame representation of the dictionary

    Examples
    --------

    >>> d = {'A5': {'order': 60, 'degree': 5},
    >>>      'S4': {'order': 24, 'degree': 4}}
    >>> print(mupsl.dict_to_frame(d))
        order  degree
    A5     60       5
    S4     24       4

    """
    frobj = pd.convert_dict_to_frame(dictobj, cols)
    return frobj


def profile_to_frame(profile):
    """
    Returns a mu-profile as a DataFrame with columns prime and mu

    Values are rendered as ``"num/den"`` strings.

    Examples
    --------

    >>> A5 = mupsl.catalog.get_group('A5')
    >>> print(mupsl.profile_to_frame(mupsl.mu_profile(A5)))
       prime   mu
    0      2  1/4
    1      3  1/3
    2      5  2/5

    """
    records = [(r, format_rational(v)) for r, v in profile.items()]
    return pd.records_to_frame(records, columns=['prime', 'mu'])


def census_to_frame(census):
    """
    Returns an element-order census as a DataFrame with columns order, count
    """
    records = sorted(census.counts.items())
    return pd.records_to_frame(records, columns=['order', 'count'])
