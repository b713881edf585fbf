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

"""Provides parsing of flags and textual values used by walgebra.

Malformed text raises errors.ParseError carrying a line and a column.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import argparse
import ast
import json
import re
from fractions import Fraction
from functools import partial
from typing import Any, Union

from walgebra import errors


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise errors.UsageError(message)


def CreateParser():
    """Parser for the display flags, accepted after an isolated '--'."""
    parser = _ArgumentParser(add_help=False)
    AddDisplayFlags(parser)
    return parser


def AddDisplayFlags(parser):
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--pretty", action="store_true")
    parser.add_argument("--verbose", "-v", action="store_true")
    parser.add_argument("--help", "-h", action="store_true")


def CreateConfigParser():
    """Parser for the run configuration; every value is kept as text and converted by type hint."""
    parser = _ArgumentParser(add_help=False)
    AddDisplayFlags(parser)
    parser.add_argument("command", nargs="?")
    parser.add_argument("--type", dest="type_tag")
    parser.add_argument("--rank")
    parser.add_argument("--partition")
    parser.add_argument("--e", dest="e")
    parser.add_argument("--h-prime", dest="h_prime")
    parser.add_argument("--case")
    parser.add_argument("--N", "--n", dest="N")
    parser.add_argument("--output", "-o")
    parser.add_argument("--golden", help="Compare the artifact with this file")
    parser.add_argument("--seed")
    parser.add_argument("--config")
    parser.add_argument("--module", help="Action of the generators on a module, e.g. '[[[0,1],[0,0]]]'")
    parser.add_argument("--generators", help="Ideal generators, separated by ';'")
    parser.add_argument("--trials")
    parser.add_argument("--sample-degree", dest="sample_degree")
    parser.add_argument("--variables")
    parser.add_argument("--bound")
    parser.add_argument("--max-length", dest="max_length")
    parser.add_argument("--gk", action="store_const", const="true")
    return parser


def SeparateFlagArgs(args):
    """Splits a list of args into command args and display flag args.

    If an isolated '--' arg is not present in the arg list, then all of the args
    are command args. If there is an isolated '--', then the args after the final
    '--' are display flag args, and the rest are command args.

    Args:
      args: The list of arguments received on the command line.
    Returns:
      A tuple with the command args (a list), followed by the flag args (a list).
    """
    if "--" in args:
        separator_index = len(args) - 1 - args[::-1].index("--")  # index of last --
        flag_args = args[separator_index + 1 :]
        args = args[:separator_index]
        return args, flag_args
    return args, []


class Partition(tuple):
    """Type hint marker for Jordan types such as '2,1'."""


class VectorSpec(dict):
    """Type hint marker for a Lie algebra element such as '{E12: 1, E23: 1}'."""


def _Position(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def ParseRational(value, source="<input>"):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    text = str(value).strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise errors.ParseError("Not a rational number: {!r}".format(text), source=source)


def ParsePartition(value, source="--partition"):
    """Parses '2,1' (or a sequence of ints) into a Partition of positive parts."""
    if isinstance(value, (list, tuple)):
        parts = list(value)
        if not all(isinstance(part, int) and part > 0 for part in parts):
            raise errors.ParseError("Partition parts must be positive integers", source=source)
        return Partition(parts)
    text = str(value)
    parts = []
    offset = 0
    for chunk in text.split(","):
        stripped = chunk.strip()
        if not stripped.isdigit() or int(stripped) == 0:
            line, column = _Position(text, offset)
            raise errors.ParseError("Expected a positive integer, got {!r}".format(chunk), line, column, source)
        parts.append(int(stripped))
        offset += len(chunk) + 1
    return Partition(parts)


def _RationalReplacement(node):
    """Turns a/b and -a/b with integer literals into the string 'a/b'."""
    if not isinstance(node, ast.BinOp) or not isinstance(node.op, ast.Div):
        return None
    operands = []
    for operand in (node.left, node.right):
        sign = ""
        if isinstance(operand, ast.UnaryOp) and isinstance(operand.op, ast.USub):
            sign, operand = "-", operand.operand
        if not isinstance(operand, ast.Constant) or not isinstance(operand.value, int):
            return None
        operands.append(sign + str(operand.value))
    return ast.Constant("{}/{}".format(*operands))


def ParseVector(value, source="--e"):
    """Parses a Lie algebra element given as a literal.

    Accepts a mapping from basis label to coefficient, '{E12: 1, E23: 1/2}', or
    a coordinate list, '[0, 1, 0]'. Coefficients may be written a/b.

    Returns:
      A VectorSpec of label -> Rat, or a list of Rats for coordinate lists.
    Raises:
      ParseError: With the line and column of the offending character.
    """
    if isinstance(value, dict):
        return VectorSpec({str(k): ParseRational(v, source) for k, v in value.items()})
    if isinstance(value, (list, tuple)):
        return [ParseRational(v, source) for v in value]
    text = str(value)
    try:
        parsed = _LiteralEval(text)
    except SyntaxError as e:
        raise errors.ParseError("Invalid syntax: {}".format(e.msg), e.lineno or 1, e.offset or 1, source)
    except ValueError:
        raise errors.ParseError("Expected a mapping or a list of coefficients", source=source)
    if isinstance(parsed, dict):
        return VectorSpec({str(k): ParseRational(v, source) for k, v in parsed.items()})
    if isinstance(parsed, (list, tuple)):
        return [ParseRational(v, source) for v in parsed]
    raise errors.ParseError("Expected a mapping or a list of coefficients", source=source)


_TOKEN = re.compile(r"(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^])")


def _Tokenize(text, source):
    tokens = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN.match(text, position)
        if match is None:
            line, column = _Position(text, position)
            raise errors.ParseError("Unexpected character {!r}".format(text[position]), line, column, source)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), position))
        position = match.end()
    return tokens


def ParsePolynomial(text, source="<input>"):
    """Parses polynomial text such as '3/2 * x^2 p + hbar * x'.

    Factors in a term may be separated by '*' or by whitespace; their order is
    preserved for noncommutative callers.

    Returns:
      A list of (coefficient, [(name, power, column), ...]) pairs, one per term.
    Raises:
      ParseError: On a malformed polynomial.
    """
    tokens = _Tokenize(text, source)

    def Fail(message, index):
        offset = tokens[index][2] if index < len(tokens) else len(text)
        line, column = _Position(text, offset)
        raise errors.ParseError(message, line, column, source)

    if not tokens:
        Fail("Empty polynomial", 0)
    terms = []
    index = 0
    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        index = 1
    while True:
        coefficient = Fraction(sign)
        factors = []
        expect_factor = True
        while index < len(tokens):
            kind, value, offset = tokens[index]
            if kind == "op" and value in "+-":
                break
            if kind == "op" and value == "*":
                if expect_factor:
                    Fail("Expected a factor before '*'", index)
                expect_factor = True
                index += 1
                continue
            if kind == "op":
                Fail("Unexpected {!r}".format(value), index)
            if kind == "number":
                if "/" in value and int(value.split("/")[1]) == 0:
                    Fail("Division by zero", index)
                coefficient *= Fraction(value)
                index += 1
            else:
                power = 1
                index += 1
                if index < len(tokens) and tokens[index][1] == "^":
                    index += 1
                    if index >= len(tokens) or tokens[index][0] != "number" or "/" in tokens[index][1]:
                        Fail("Expected an integer exponent", index)
                    power = int(tokens[index][1])
                    index += 1
                line, column = _Position(text, offset)
                factors.append((value, power, column))
            expect_factor = False
        if expect_factor:
            Fail("Expected a term", index)
        terms.append((coefficient, factors))
        if index >= len(tokens):
            return terms
        sign = -1 if tokens[index][1] == "-" else 1
        index += 1


def ParseJsonConfig(text, source="<config>"):
    """Parses a JSON configuration object."""
    try:
        parsed = json.loads(text)
    except ValueError as e:
        raise errors.ParseError(getattr(e, "msg", str(e)), getattr(e, "lineno", 1), getattr(e, "colno", 1), source)
    if not isinstance(parsed, dict):
        raise errors.ParseError("A configuration must be a JSON object", source=source)
    return parsed


def _DeGenericAlias(t):
    if IsGenericAlias(t):
        return t.__origin__, getattr(t, "__args__", (Any,))
    return t, ()


def IsGenericAlias(t):
    return "__origin__" in dir(t)


def ParseComplexValue(value, t):
    """Parses a value for an Optional/Union type hint, trying each member type in turn."""
    origin, args = _DeGenericAlias(t)
    if origin is Union:
        if value is None or value == "None":
            if type(None) in args:
                return None
        last_error = None
        for each_type in args:
            if each_type is type(None):
                continue
            try:
                return SpecTypeParseValueGen(each_type)(value)
            except errors.ParseError:
                raise
            except (ValueError, TypeError) as e:
                last_error = e
        raise errors.UsageError("Cannot parse {!r} as {}: {}".format(value, t, last_error))
    if origin in (list, tuple):
        parsed = DefaultParseValue(value) if isinstance(value, str) else value
        if not isinstance(parsed, (list, tuple)):
            parsed = [parsed]
        item_type = args[0] if args else Any
        convert = (lambda item: item) if item_type is Any else SpecTypeParseValueGen(item_type)
        return origin(convert(item) for item in parsed)
    raise errors.UsageError("Unsupported type hint {}".format(t))


def _ParseInt(value):
    if isinstance(value, bool):
        raise ValueError("Booleans are not integers")
    if isinstance(value, int):
        return value
    text = str(value).strip()
    if not re.match(r"^[+-]?\d+$", text):
        raise ValueError("Not an integer: {!r}".format(text))
    return int(text)


def _ParseBool(value):
    if isinstance(value, bool):
        return value
    return str(value) in ("True", "true", "1")


TypeToParser = {
    int: _ParseInt,
    bool: _ParseBool,
    str: str,
    Fraction: ParseRational,
    Partition: ParsePartition,
    VectorSpec: ParseVector,
}


def SpecTypeParseValueGen(t):
    # complex type, e.g. Optional
    if IsGenericAlias(t):
        return partial(ParseComplexValue, t=t)
    return TypeToParser.get(t, t)


def DefaultParseValue(value):
    """The default parsing of a textual value.

    If the value is made of only Python literals and containers, then the value
    is parsed as its Python value. Otherwise the value is treated as a string.

    Args:
      value: A string from the command line.
    Returns:
      The parsed value, of the type determined most appropriate.
    """
    # Note: _LiteralEval will treat '#' as the start of a comment.
    try:
        return _LiteralEval(value)
    except (SyntaxError, ValueError):
        return value


def _LiteralEval(value):
    """Parse value as a Python literal, or container of containers and literals.

    Bare words become strings and integer quotients a/b become the string 'a/b',
    so '{E12: 1/2}' is the dict {'E12': '1/2'}.

    Args:
      value: A string to be parsed as a literal or container of containers and
        literals.
    Returns:
      The Python value representing the value arg.
    Raises:
      ValueError: If the value is not an expression with only containers and
        literals.
      SyntaxError: If the value string has a syntax error.
    """
    root = ast.parse(value.strip(), mode="eval")
    replacement = _RationalReplacement(root.body)
    if replacement is not None:
        root.body = replacement
    elif isinstance(root.body, ast.BinOp):  # pytype: disable=attribute-error
        raise ValueError(value)

    for node in ast.walk(root):
        for field, child in ast.iter_fields(node):
            if isinstance(child, list):
                for index, subchild in enumerate(child):
                    child[index] = _Replacement(subchild)
            elif isinstance(child, ast.AST):
                setattr(node, field, _Replacement(child))

    # ast.literal_eval supports strings, bytes, numbers, tuples, lists, dicts,
    # sets, booleans, and None.
    return ast.literal_eval(root)


def _Replacement(node):
    """Returns a node to use in place of the supplied node in the AST.

    Args:
      node: Any AST node.
    Returns:
      Names other than True, False and None become string constants, integer
      quotients become 'a/b' strings; other nodes are returned unchanged.
    """
    if isinstance(node, ast.Name):
        if node.id in ("True", "False", "None"):
            return node
        return ast.Constant(node.id)
    rational = _RationalReplacement(node)
    return node if rational is None else rational


def ConvertValue(value, t):
    """Converts a textual or JSON value to the type hint t."""
    return SpecTypeParseValueGen(t)(value)

