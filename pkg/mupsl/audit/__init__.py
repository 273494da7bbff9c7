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
Replays of the arithmetic steps behind the PSL(2,q) characterization
"""

from .arithmetic import (
    factorial_inequality, factorial_sweep, alternating_case_scan,
    alternating_survivors, suzuki_audit)
from .scanner import (
    ScanBranch, CONTRADICTION, SKIPPED, scan_branches,
    exponent_inequality_solutions, exponent_inequality_report,
    bound_exponent, subcase_order_comparison, subcase_sweep,
    subcase_survivors, mu_omega_minus_exclusion)
from .walter import (
    ODD_CANDIDATE, J1, REE, ree_mu2, walter_candidates,
    abelian_sylow2_audit)
from .sporadic import (
    SporadicEntry, sporadic_table, sporadic_order_audit, ATLAS_CONSTANTS,
    tits_family_mu3, is_characteristic_value, atlas_constants_audit)
from .theorem import mu_equality_theorem_check, check_perfect_below_half
from .registry import (
    CHECKS, FAMILY_TAGS, CASE_FAMILIES, NUMBERED_CHECKS, check_names,
    family_tags, numbered_check, run_checks, run_all)
