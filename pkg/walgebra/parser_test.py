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


"""Tests for the parser module."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from fractions import Fraction
from typing import Optional

from walgebra import errors
from walgebra import parser
from walgebra import testutils


class ParserTest(testutils.BaseTestCase):
    def testCreateParser(self):
        flags = parser.CreateParser().parse_args(["--pretty", "-v"])
        self.assertTrue(flags.pretty)
        self.assertTrue(flags.verbose)
        self.assertFalse(flags.help)

    def testCreateConfigParserKeepsText(self):
        values = vars(parser.CreateConfigParser().parse_args(["walg", "--type", "A", "--rank", "2", "--N", "8"]))
        self.assertEqual(values["command"], "walg")
        self.assertEqual(values["type_tag"], "A")
        self.assertEqual(values["rank"], "2")
        self.assertEqual(values["N"], "8")
        self.assertIsNone(values["partition"])

    def testUnknownFlag(self):
        with self.assertRaisesRegex(errors.UsageError, "unrecognized arguments"):
            parser.CreateConfigParser().parse_args(["walg", "--bogus", "1"])

    def testSeparateFlagArgs(self):
        self.assertEqual(parser.SeparateFlagArgs([]), ([], []))
        self.assertEqual(parser.SeparateFlagArgs(["walg", "--N", "8"]), (["walg", "--N", "8"], []))
        self.assertEqual(parser.SeparateFlagArgs(["walg", "--"]), (["walg"], []))
        self.assertEqual(parser.SeparateFlagArgs(["walg", "--", "--pretty"]), (["walg"], ["--pretty"]))
        self.assertEqual(parser.SeparateFlagArgs(["--", "--json", "-v"]), ([], ["--json", "-v"]))
        self.assertEqual(parser.SeparateFlagArgs(["a", "--", "b", "--"]), (["a", "--", "b"], []))
        self.assertEqual(parser.SeparateFlagArgs(["a", "--", "b", "--", "c"]), (["a", "--", "b"], ["c"]))

    def testDefaultParseValue(self):
        self.assertEqual(parser.DefaultParseValue("sl3-minimal"), "sl3-minimal")
        self.assertEqual(parser.DefaultParseValue("23"), 23)
        self.assertEqual(parser.DefaultParseValue("'23'"), "23")
        self.assertEqual(parser.DefaultParseValue("None"), None)
        self.assertEqual(parser.DefaultParseValue("True"), True)
        self.assertEqual(parser.DefaultParseValue("1+1"), "1+1")
        self.assertEqual(parser.DefaultParseValue('"'), '"')

    def testDefaultParseValueRationals(self):
        self.assertEqual(parser.DefaultParseValue("1/2"), "1/2")
        self.assertEqual(parser.DefaultParseValue("-3/8"), "-3/8")
        self.assertEqual(parser.DefaultParseValue("[[0, 1/2], [0, 0]]"), [[0, "1/2"], [0, 0]])

    def testDefaultParseValueBareWords(self):
        self.assertEqual(parser.DefaultParseValue("{E12: 1, E23: 1}"), {"E12": 1, "E23": 1})
        self.assertEqual(parser.DefaultParseValue("[H1, 2]"), ["H1", 2])

    def testParseRational(self):
        self.assertEqual(parser.ParseRational("-3/8"), Fraction(-3, 8))
        self.assertEqual(parser.ParseRational(4), Fraction(4))
        with self.assertRaisesRegex(errors.ParseError, "Not a rational"):
            parser.ParseRational("1/0")

    def testParsePartition(self):
        self.assertEqual(parser.ParsePartition("2, 1"), (2, 1))
        self.assertIsInstance(parser.ParsePartition([3]), parser.Partition)
        with self.assertRaises(errors.ParseError) as context:
            parser.ParsePartition("2,x")
        self.assertEqual((context.exception.line, context.exception.column), (1, 3))
        self.assertEqual(context.exception.source, "--partition")
        with self.assertRaises(errors.ParseError):
            parser.ParsePartition([2, 0])

    def testParseVector(self):
        vector = parser.ParseVector("{E12: 1, E23: 1/2}")
        self.assertIsInstance(vector, parser.VectorSpec)
        self.assertEqual(vector, {"E12": Fraction(1), "E23": Fraction(1, 2)})
        self.assertEqual(parser.ParseVector("[0, 1, -1/3]"), [0, 1, Fraction(-1, 3)])
        self.assertEqual(parser.ParseVector({"H1": "4/3"}), {"H1": Fraction(4, 3)})

    def testParseVectorErrors(self):
        with self.assertRaisesRegex(errors.ParseError, "Invalid syntax"):
            parser.ParseVector("{E12: 1")
        with self.assertRaisesRegex(errors.ParseError, "mapping or a list"):
            parser.ParseVector("7")

    def testParsePolynomial(self):
        terms = parser.ParsePolynomial("3/2 * x^2 p + hbar * x")
        self.assertEqual(terms, [(Fraction(3, 2), [("x", 2, 7), ("p", 1, 11)]), (Fraction(1), [("hbar", 1, 15), ("x", 1, 22)])])
        self.assertEqual(parser.ParsePolynomial("- E21 E12"), [(Fraction(-1), [("E21", 1, 3), ("E12", 1, 7)])])

    def testParsePolynomialErrors(self):
        with self.assertRaises(errors.ParseError) as context:
            parser.ParsePolynomial("x^", source="--generators")
        self.assertEqual(context.exception.column, 3)
        self.assertIn("--generators:1:3", str(context.exception))
        with self.assertRaisesRegex(errors.ParseError, "before"):
            parser.ParsePolynomial("x + * y")
        with self.assertRaisesRegex(errors.ParseError, "Unexpected character"):
            parser.ParsePolynomial("x $ y")
        with self.assertRaisesRegex(errors.ParseError, "Empty"):
            parser.ParsePolynomial("  ")

    def testParseJsonConfig(self):
        self.assertEqual(parser.ParseJsonConfig('{"command": "walg", "N": 8}'), {"command": "walg", "N": 8})
        with self.assertRaises(errors.ParseError) as context:
            parser.ParseJsonConfig('{"N": 8,\n "case": }', source="run.json")
        self.assertEqual(context.exception.line, 2)
        self.assertEqual(context.exception.source, "run.json")
        with self.assertRaisesRegex(errors.ParseError, "JSON object"):
            parser.ParseJsonConfig("[1, 2]")

    def testConvertValue(self):
        self.assertEqual(parser.ConvertValue("8", int), 8)
        self.assertEqual(parser.ConvertValue("3", Optional[int]), 3)
        self.assertIsNone(parser.ConvertValue("None", Optional[int]))
        self.assertEqual(parser.ConvertValue("3,1", Optional[parser.Partition]), (3, 1))
        self.assertTrue(parser.ConvertValue("true", bool))
        self.assertFalse(parser.ConvertValue("false", bool))
        self.assertEqual(parser.ConvertValue("1/2", Fraction), Fraction(1, 2))

    def testConvertValueErrors(self):
        with self.assertRaises(ValueError):
            parser.ConvertValue("eight", int)
        with self.assertRaisesRegex(errors.UsageError, "Cannot parse"):
            parser.ConvertValue("eight", Optional[int])
        with self.assertRaises(errors.ParseError):
            parser.ConvertValue("{E12: ", Optional[parser.VectorSpec])


if __name__ == "__main__":
    testutils.main()
