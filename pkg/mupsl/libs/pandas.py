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


import pandas as pd

Series = pd.Series
DataFrame = pd.DataFrame


def convert_dict_to_frame(dictobj, cols=None):
    df = pd.DataFrame.from_dict(dictobj, orient='index')
    if isinstance(cols, list):
        df.columns = cols
    if len(df.index) and isinstance(df.index[0], tuple):
        df.index = pd.MultiIndex.from_tuples(df.index)
    return df


def records_to_frame(records, columns):
    return pd.DataFrame.from_records(records, columns=columns)
