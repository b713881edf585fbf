# Copyright (C) 2026 The walgebra Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exceptions raised by walgebra.

Checks that are allowed to fail (associativity, module relations, stabilization)
return a report.Report instead of raising.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


class WalgebraError(Exception):
    """Base class of every anticipated walgebra failure."""


class UsageError(WalgebraError, ValueError):
    """The caller misused an operation: wrong shapes, mixed contexts, bad bounds."""


class DomainError(WalgebraError, ValueError):
    """The input is well formed but mathematically invalid for the operation.

    Examples are a non-nilpotent element passed to Jacobson-Morozov, an h' that
    does not commute with h, or a non-central element passed to the center map.
    """


class ConsistencyError(WalgebraError, RuntimeError):
    """An invariant guaranteed by a proved statement failed.

    This signals a bug in walgebra, never a property of the input.
    """


class ParseError(UsageError):
    """Malformed text input, located by line and column."""

    def __init__(self, message, line=1, column=1, source="<input>"):
        """Constructs a ParseError.

        Args:
          message: What is wrong with the input.
          line: 1-based line of the offending character.
          column: 1-based column of the offending character.
          source: Name of the input, e.g. a file path or a flag name.
        """
        super(ParseError, self).__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.source = source

    def __str__(self):
        return "{source}:{line}:{column}: {message}".format(
            source=self.source, line=self.line, column=self.column, message=self.message
        )
