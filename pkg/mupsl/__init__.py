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
Exact mu-profiles of finite groups (mupsl)
******************************************

This file includes static methods and imports.

"""

from mupsl.libs import *
import mupsl.util

from mupsl.util import (
    note, p_part, p_prime_part, prime_power_decomposition, is_prime_power,
    require_prime, require_prime_power, gcd2, format_rational, parse_rational,
    reset, dict_to_frame, profile_to_frame, census_to_frame,
    load_package_globals)

from mupsl.exceptions import (
    DegreeError, CapExceeded, NotAMember, NotNormal, PrimeNotInSpectrum,
    NotRPrime, NotPrime, NotPrimePower, BudgetExceeded, ConstraintViolation,
    NotADivisor, DomainError, MalformedProfile, CoprimalityViolation,
    GroupFileError, AuditFailure)

from mupsl.structure import (
    auditable, set_container, enumeration_cap, current_cap, PendingCheck)
from mupsl.report import AuditReport, combine_verdicts, verdict_of

from mupsl.core import (
    Permutation, compose, element_order, StabilizerChain, PermGroup,
    Subgroup, ConjugacyClass, commutator, group_order, enumerate_elements,
    centralizer, center, conjugacy_class_reps, count_solutions_xn,
    solutions_xn, is_normal, normal_closure, derived_subgroup, is_perfect,
    quotient_group)

from mupsl.mu import (
    MuProfile, MuDecomposition, profile_from_value_set, order_from_mu,
    prime_spectrum, singular_count, mu_r, mu_r_or_zero, mu_profile,
    mu_decomposition, verify_centralizer_identity, verify_quotient_inequality,
    verify_oprime_reduction, check_coprime_split, verify_solution_closure,
    verify_regular_count_identity)

from mupsl.psl2 import (
    FieldTable, build_field, is_irreducible, least_irreducible, psl2_group,
    psl2_order, projective_generators, Psl2Census,
    element_order_census_analytic, element_order_census,
    element_order_census_brute, mu_branch, mu_analytic, mu_profile_analytic,
    identify_psl2, brute_vs_analytic, p_element_class_audit)

from mupsl.lie import (
    LieFamily, as_family, normalize_tag, e_L, exponent_h, denominator_d,
    cyclotomic_indices, max_index, cyclotomic_value, CyclotomicFactorization,
    factorize, cyclotomic_factors, lie_order, closed_form_order,
    verify_order_closed_form, is_zsigmondy_exception, primitive_prime,
    sylow_part_from_factor, gln_bound_check)

load_package_globals()

import mupsl.config
from mupsl.config import Config, _load_default_config
_load_default_config()

container = None

import mupsl.interface
from mupsl.interface import (
    read_group_text, read_group_file, write_group_text, reports_to_json,
    reports_to_frame, reports_to_tsv, format_reports, document_to_text)

import mupsl.catalog
from mupsl.session import AuditWorkspace

from mupsl.audit import (
    factorial_inequality, factorial_sweep, alternating_case_scan,
    alternating_survivors, suzuki_audit, scan_branches,
    exponent_inequality_solutions, exponent_inequality_report,
    bound_exponent, subcase_order_comparison, subcase_sweep,
    subcase_survivors, mu_omega_minus_exclusion, ree_mu2, walter_candidates,
    abelian_sylow2_audit, SporadicEntry, sporadic_table,
    sporadic_order_audit, tits_family_mu3, is_characteristic_value,
    atlas_constants_audit, mu_equality_theorem_check,
    check_perfect_below_half, run_checks, run_all, check_names,
    family_tags, numbered_check)

name = "mupsl"
from mupsl.version import __version__
