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
Catalog of built-in permutation groups and their normal subgroups
"""

from .groups import (
    symmetric_group, alternating_group, dihedral_group, cyclic_group,
    sl2_group, direct_product, names, get_group, catalog_frame)
from .table import (
    NormalPair, normal_subgroup, normal_pairs, normal_subgroup_table)
