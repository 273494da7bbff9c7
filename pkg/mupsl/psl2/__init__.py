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
PSL(2,q) on the projective line, with its analytic element census
"""

from .field import FieldTable, build_field, is_irreducible, least_irreducible
from .group import psl2_group, psl2_order, projective_generators
from .census import (
    Psl2Census, element_order_census_analytic, element_order_census,
    element_order_census_brute, mu_branch, mu_analytic, mu_profile_analytic,
    identify_psl2, brute_vs_analytic, p_element_class_audit)
