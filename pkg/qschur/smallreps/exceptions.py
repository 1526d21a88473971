# This file is part of qschur-smallreps.
#
# Copyright 2026 The qschur-smallreps Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# SPDX-License-Identifier: Apache-2.0


class QSchurError(Exception):
    """Base class for qschur-smallreps errors."""


class DomainError(QSchurError):
    """Exception raised when the arguments of an operation violate its preconditions.

    Attributes:
        msg -- A message error carrying further details
    """

    def __init__(self, msg):
        super().__init__(msg)
        self.msg = msg


class UnsupportedInputError(QSchurError):
    """Exception raised when an input is well formed but outside what can be computed, such as
    an expanded Drinfeld tuple with no factored form or a suite exceeding its cost guard.

    Attributes:
        msg -- A message error carrying further details
    """

    def __init__(self, msg):
        super().__init__(msg)
        self.msg = msg


class ConsistencyError(QSchurError):
    """Exception raised when two independent computations of the same object disagree.

    Attributes:
        msg -- A message error carrying further details
    """

    def __init__(self, msg):
        super().__init__(msg)
        self.msg = msg


class ParseError(QSchurError):
    """Exception raised when a command line string or a JSON document is not correctly formatted.

    Attributes:
        msg -- A message error carrying further details
    """

    def __init__(self, msg):
        super().__init__(msg)
        self.msg = msg
