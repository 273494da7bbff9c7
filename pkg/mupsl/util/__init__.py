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

from .package_utils import load_package_globals
from .package_utils import (
    note, p_part, p_prime_part, prime_power_decomposition, is_prime_power,
    require_prime, require_prime_power, gcd2, format_rational, parse_rational)
from .user_utils import (
    reset, dict_to_frame, profile_to_frame, census_to_frame)
