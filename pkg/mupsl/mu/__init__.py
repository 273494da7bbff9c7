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
Exact mu-profiles and the identities they satisfy
"""

from .profile import (
    MuProfile, MuDecomposition, profile_from_value_set, order_from_mu)
from .singular import (
    prime_spectrum, singular_count, mu_r, mu_r_or_zero, mu_profile,
    mu_decomposition)
from .checks import (
    verify_centralizer_identity, verify_quotient_inequality,
    verify_oprime_reduction, check_coprime_split, verify_solution_closure,
    verify_regular_count_identity)
