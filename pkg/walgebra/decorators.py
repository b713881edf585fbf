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

"""These decorators attach command-line metadata to functions.

Command registers a function as a walgebra command together with the statement
tag its report checks. SetParseFn and SetParseFns set the functions used to
parse textual configuration values before they reach the decorated function.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

WALGEBRA_METADATA = "WALGEBRA_METADATA"
WALGEBRA_PARSE_FNS = "WALGEBRA_PARSE_FNS"
COMMAND_NAME = "COMMAND_NAME"
STATEMENT_TAG = "STATEMENT_TAG"


def Command(name, tag=None):
    """Marks the decorated function as the command `name`.

    Args:
      name: The command name used on the command line, e.g. 'verify-gr'.
      tag: The statement the command's report checks, e.g. 'Thm 0.1.0'.
    Returns:
      The decorated function, which now carries its command metadata.
    """

    def _Decorator(fn):
        _SetMetadata(fn, COMMAND_NAME, name)
        _SetMetadata(fn, STATEMENT_TAG, tag)
        return fn

    return _Decorator


def SetParseFn(fn, *arguments):
    """Sets the fn used to parse the named arguments of the decorated fn.

    Args:
      fn: The function to be used for parsing arguments.
      *arguments: The arguments for which to use the parse fn. If none are listed,
        then this will set the default parse function.
    Returns:
      The decorated function, which now has metadata telling how to parse.
    """

    def _Decorator(func):
        parse_fns = GetParseFns(func)
        if not arguments:
            parse_fns["default"] = fn
        else:
            for argument in arguments:
                parse_fns["named"][argument] = fn
        _SetMetadata(func, WALGEBRA_PARSE_FNS, parse_fns)
        return func

    return _Decorator


def SetParseFns(**named):
    """Sets one parse fn per named argument of the decorated fn.

    A parse function accepts a single string and returns the value used in its
    place.
    """

    def _Decorator(fn):
        parse_fns = GetParseFns(fn)
        parse_fns["named"].update(named)
        _SetMetadata(fn, WALGEBRA_PARSE_FNS, parse_fns)
        return fn

    return _Decorator


def _SetMetadata(fn, attribute, value):
    metadata = GetMetadata(fn)
    metadata[attribute] = value
    setattr(fn, WALGEBRA_METADATA, metadata)


def GetMetadata(fn):
    # type: (...) -> dict
    """Gets metadata attached to the function `fn` as an attribute.

    Args:
      fn: The function from which to retrieve the function metadata.
    Returns:
      A dictionary mapping property strings to their value; empty when nothing
      was attached.
    """
    return dict(getattr(fn, WALGEBRA_METADATA, {}))


def IsCommand(fn):
    return COMMAND_NAME in GetMetadata(fn)


def GetParseFns(fn):
    # type: (...) -> dict
    metadata = GetMetadata(fn)
    default = {"default": None, "named": {}}
    parse_fns = metadata.get(WALGEBRA_PARSE_FNS, default)
    return {"default": parse_fns["default"], "named": dict(parse_fns["named"])}
