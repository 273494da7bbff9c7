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
Cyclotomic order factorizations of the finite groups of Lie type
"""

from .family import (
    LieFamily, as_family, normalize_tag, CLASSICAL, EXCEPTIONAL, TAGS,
    MIN_RANK)
from .tables import (
    e_L, exponent_h, denominator_d, cyclotomic_indices, max_index)
from .orders import (
    cyclotomic_value, CyclotomicFactorization, factorize, cyclotomic_factors,
    lie_order, closed_form_order, verify_order_closed_form,
    is_zsigmondy_exception, primitive_prime, sylow_part_from_factor,
    gln_bound_check)
