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

"""Tests for the ideals module."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import random

import sympy
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from walgebra import errors
from walgebra import ideals
from walgebra import testutils
from walgebra import walg

_XY = ideals.PolyRing(["x", "y"])
_XYZ = ideals.PolyRing(["x", "y", "z"])


def _Parse(text, ring=_XY):
    return ideals.ParsePoly(ring, text)


def _ToSympy(poly, symbols):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s ** a for s, a in zip(symbols, m)])
         for m, c in poly.terms.items()),
        sympy.Integer(0),
    )


class PolyTest(testutils.BaseTestCase):
    def testArithmetic(self):
        x, y = _XY.Variable("x"), _XY.Variable("y")
        self.assertEqual((x + y) ** 2, _Parse("x^2 + 2*x y + y^2"))
        self.assertEqual(1 - x, _Parse("-x + 1"))
        self.assertEqual(_Parse("x y - x y"), 0)

    def testFormat(self):
        self.assertEqual(_Parse("y^2 + x^2").Format(), "x^2 + y^2")
        self.assertEqual(_Parse("y^3 - 1/2*x").Format(), "y^3 - 1/2*x")

    def testDegrevlex(self):
        self.assertEqual(_Parse("x y + y^2 + x^2").LeadingMonomial(), (2, 0))
        self.assertEqual(_Parse("x y + y^2").LeadingMonomial(), (1, 1))
        self.assertEqual(_Parse("x + y^2").LeadingMonomial(), (0, 2))

    def testWeightedOrder(self):
        ring = ideals.PolyRing(["x", "y"], weights=[2, 1])
        self.assertEqual(_Parse("x + y^2", ring).LeadingMonomial(), (1, 0))
        self.assertTrue(_Parse("x + y^2", ring).IsHomogeneous())
        self.assertFalse(_Parse("x + y", ring).IsHomogeneous())

    def testNonPositiveWeightsFallBackToStandardDegree(self):
        ring = ideals.PolyRing(["f", "h", "e"], weights=[0, 2, 4])
        self.assertEqual(ring.grading, (1, 1, 1))
        self.assertTrue(_Parse("2*e f + 1/2*h^2", ring).IsHomogeneous())

    def testSubstitute(self):
        target = ideals.PolyRing(["t"])
        t = target.Variable("t")
        result = _Parse("x y + y^2").Substitute([t + 1, t], target)
        self.assertEqual(result, ideals.ParsePoly(target, "2*t^2 + t"))

    def testRingErrors(self):
        with self.assertRaises(errors.UsageError):
            ideals.PolyRing(["x", "x"])
        with self.assertRaises(errors.UsageError):
            ideals.PolyRing(["x"], order="grlex")
        with self.assertRaisesRegex(errors.UsageError, "different rings"):
            _XY.Variable("x") + _XYZ.Variable("x")

    def testParseErrors(self):
        with self.assertRaisesRegex(errors.ParseError, "1:5"):
            _Parse("x + q")
        with self.assertRaisesRegex(errors.ParseError, "Expected a term"):
            _Parse("x +")


class BuchbergerTest(testutils.BaseTestCase):
    def testPrincipal(self):
        ideal = ideals.Buchberger([_Parse("x")])
        self.assertEqual(ideal.basis, (_Parse("x"),))

    def testTwoQuadrics(self):
        ideal = ideals.Buchberger([_Parse("x^2 + y^2"), _Parse("x y")])
        self.assertEqual(sorted(ideal.LeadingMonomials()), [(0, 3), (1, 1), (2, 0)])
        self.assertEqual(ideal.basis, (_Parse("x y"), _Parse("x^2 + y^2"), _Parse("y^3")))
        self.assertTrue(ideal.Contains(_Parse("x^3")))
        self.assertFalse(ideal.Contains(_Parse("y^2")))

    def testUnit(self):
        self.assertEqual(ideals.Buchberger([_XY.One()]).basis, (_XY.One(),))
        ideal = ideals.Buchberger([_Parse("x"), _Parse("x + 1")])
        self.assertTrue(ideal.IsUnit())

    def testZero(self):
        ideal = ideals.Buchberger([_XY.Zero()])
        self.assertEqual(ideal.basis, ())
        self.assertTrue(ideal.IsZero())

    def testNeedsRing(self):
        with self.assertRaises(errors.UsageError):
            ideals.Buchberger([])
        self.assertEqual(ideals.Buchberger([], ring=_XY).basis, ())

    def testMixedRings(self):
        with self.assertRaises(errors.UsageError):
            ideals.Buchberger([_Parse("x"), _XYZ.Variable("z")])

    def testReducedBasisIsCanonical(self):
        first = ideals.Buchberger([_Parse("x^2 + y^2"), _Parse("x y")])
        second = ideals.Buchberger([_Parse("x^2 + y^2 + x y"), _Parse("x y"), _Parse("y^3 + x^3")])
        self.assertEqual(first, second)

    def testLex(self):
        ring = ideals.PolyRing(["x", "y"], order=ideals.LEX)
        ideal = ideals.Buchberger([_Parse("x^2 - y", ring), _Parse("x y - 1", ring)])
        # x = y^2 on the variety, so y^3 = 1.
        self.assertIn(_Parse("y^3 - 1", ring), ideal.basis)
        self.assertIn(_Parse("x - y^2", ring), ideal.basis)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=10 ** 6))
    def testAgreesWithSympy(self, seed):
        rng = random.Random(seed)
        generators = []
        for _ in range(rng.randint(1, 3)):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                exponents = [0, 0, 0]
                for _ in range(rng.randint(0, 2)):
                    exponents[rng.randrange(3)] += 1
                terms[tuple(exponents)] = rng.choice([-2, -1, 1, 3])
            generators.append(ideals.Poly(_XYZ, terms))
        ideal = ideals.Buchberger(generators)
        symbols = sympy.symbols("x y z")
        expected = sympy.groebner(
            [_ToSympy(g, symbols) for g in generators], *symbols, order="grevlex", domain=sympy.QQ
        )

        def Monic(expr):
            return sympy.Poly(expr, *symbols, domain=sympy.QQ).monic().as_expr()

        self.assertEqual({Monic(e) for e in expected.exprs}, {Monic(_ToSympy(g, symbols)) for g in ideal.basis})
        for generator in generators:
            self.assertTrue(ideal.Contains(generator))


class HilbertTest(testutils.BaseTestCase):
    def testNumerator(self):
        numerator = ideals.HilbertNumerator([(2, 0), (1, 1), (0, 3)], (1, 1))
        self.assertEqual(numerator.as_expr(), sympy.expand((1 - ideals.Z ** 2) ** 2))

    def testZeroDimensional(self):
        ideal = ideals.Buchberger([_Parse("x^2 + y^2"), _Parse("x y")])
        self.assertEqual(ideal.HilbertFunction(4), [1, 2, 1, 0, 0])
        self.assertEqual(ideal.KrullDimension(), 0)
        self.assertEqual(ideal.Multiplicity(), 4)
        self.assertEqual(ideal.Codimension(), 4)

    def testStaircaseCount(self):
        ideal = ideals.Buchberger([_Parse("x^2 z - y^3", _XYZ), _Parse("x y - z^2", _XYZ)])
        values = ideal.HilbertFunction(7)
        self.assertEqual(values, [len(ideal.StandardMonomials(k)) for k in range(8)])

    def testLine(self):
        ideal = ideals.Buchberger([_Parse("x")])
        self.assertEqual(ideal.KrullDimension(), 1)
        self.assertEqual(ideal.Multiplicity(), 1)
        self.assertIsNone(ideal.Codimension())

    def testUnitAndZero(self):
        unit = ideals.Buchberger([_XY.One()])
        self.assertEqual(unit.KrullDimension(), -1)
        self.assertEqual(unit.HilbertFunction(3), [0, 0, 0, 0])
        zero = ideals.Buchberger([], ring=_XY)
        self.assertEqual(zero.KrullDimension(), 2)
        self.assertEqual(zero.HilbertFunction(3), [1, 2, 3, 4])

    def testWeightedZeroIdealMatchesSliceCount(self):
        ring = ideals.PolyRing(["t1", "t2", "t3", "t4"], weights=[2, 3, 3, 4])
        zero = ideals.Buchberger([], ring=ring)
        self.assertEqual(zero.HilbertFunction(6), walg.SliceHilbert([2, 3, 3, 4], 6))

    def testWeightedPrincipal(self):
        ring = ideals.PolyRing(["t"], weights=[4])
        t = ring.Variable("t")
        self.assertEqual(ideals.Buchberger([t]).HilbertFunction(8), [1] + [0] * 8)
        self.assertEqual(ideals.Buchberger([t * t]).HilbertFunction(8), [1, 0, 0, 0, 1, 0, 0, 0, 0])
        self.assertEqual(ideals.Buchberger([t * t]).Multiplicity(), 2)

    def testNonPositiveWeights(self):
        with self.assertRaises(errors.UsageError):
            ideals.HilbertNumerator([(1,)], (0,))


class IntersectTest(testutils.BaseTestCase):
    def testCoordinateAxes(self):
        result = ideals.Intersect(ideals.Buchberger([_Parse("x")]), ideals.Buchberger([_Parse("y")]))
        self.assertEqual(result.basis, (_Parse("x y"),))

    def testNested(self):
        result = ideals.Intersect(ideals.Buchberger([_Parse("x^2")]), ideals.Buchberger([_Parse("x y")]))
        self.assertEqual(result.basis, (_Parse("x^2 y"),))

    def testWithZero(self):
        result = ideals.Intersect(ideals.Buchberger([_Parse("x")]), ideals.Buchberger([], ring=_XY))
        self.assertTrue(result.IsZero())

    def testDifferentRings(self):
        with self.assertRaises(errors.UsageError):
            ideals.Intersect(ideals.Buchberger([_Parse("x")]), ideals.Buchberger([_XYZ.Variable("x")]))


if __name__ == "__main__":
    testutils.main()
