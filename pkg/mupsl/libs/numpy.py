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


import numpy as np

intp = np.intp
int64 = np.int64
ndarray = np.ndarray
array = np.array
asarray = np.asarray
arange = np.arange
empty = np.empty
empty_like = np.empty_like
zeros = np.zeros
ones = np.ones
concatenate = np.concatenate
unique = np.unique
take_along_axis = np.take_along_axis
argsort = np.argsort
sort = np.sort
all = np.all
any = np.any
flatnonzero = np.flatnonzero
array_equal = np.array_equal
count_nonzero = np.count_nonzero
ascontiguousarray = np.ascontiguousarray
where = np.where
dot = np.dot
