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
Exception types raised by mupsl

Every exception derives from a builtin class, so callers can catch either
the specific type or the builtin one.
"""


class DegreeError(ValueError):
    """Permutations of different degrees were combined"""


class CapExceeded(RuntimeError):
    """A group is larger than the configured enumeration cap"""

    def __init__(self, order, cap):
        super().__init__(
            'Group order {} exceeds the enumeration cap {}'.format(order, cap))
        self.order = order
        self.cap = cap


class NotAMember(ValueError):
    """An element does not lie in the group"""


class NotNormal(ValueError):
    """A subgroup is not normal in its parent"""


class PrimeNotInSpectrum(ValueError):
    """A prime does not divide the group order"""


class NotRPrime(ValueError):
    """A subgroup order is divisible by the prime it should avoid"""


class NotPrime(ValueError):
    """An argument that must be prime is not"""


class NotPrimePower(ValueError):
    """An argument that must be a prime power is not"""


class BudgetExceeded(RuntimeError):
    """A field or group is larger than the configured table budget"""


class ConstraintViolation(ValueError):
    """A Lie family parameter violates the family constraints"""


class NotADivisor(ValueError):
    """A prime does not divide the cyclotomic factor it was paired with"""


class DomainError(ValueError):
    """An argument lies outside the range an operation is defined on"""


class MalformedProfile(ValueError):
    """A set of rationals is not the value set of any mu-profile"""


class CoprimalityViolation(ArithmeticError):
    """A mu value did not decompose as t/|R| with t coprime to r"""


class GroupFileError(ValueError):
    """A group file could not be parsed"""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = 'line {}: {}'.format(line_number, message)
        super().__init__(message)
        self.line_number = line_number


class AuditFailure(AssertionError):
    """An audit report carries a fail verdict"""
