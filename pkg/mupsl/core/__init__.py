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

from mupsl.core.permutation import Permutation, compose, element_order
from mupsl.core.schreier import StabilizerChain
from mupsl.core.group import (
    PermGroup, Subgroup, ConjugacyClass, commutator, group_order,
    enumerate_elements, centralizer, center, conjugacy_class_reps,
    count_solutions_xn, solutions_xn, is_normal, normal_closure,
    derived_subgroup, is_perfect, quotient_group)
