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

"""Tests for the reps module."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import functools
import random
from fractions import Fraction

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
import mock

from walgebra import errors
from walgebra import liealg
from walgebra import pbw
from walgebra import report
from walgebra import reps
from walgebra import slices
from walgebra import testutils
from walgebra import walg

# Only names, structure and N are read by the character search.
_Presentation = collections.namedtuple("_Presentation", ["names", "structure", "N"])


@functools.lru_cache(maxsize=None)
def _Build(name, N):
    return walg.BuildPresentation(walg.Quotient(liealg.SetupForCase(name)), N)


def _Sl2():
    return _Build("sl2-principal", 4)


class CharacterTest(testutils.BaseTestCase):
    def testSl2Family(self):
        characters = reps.FindCharacters(_Sl2())
        self.assertEqual(len(characters), 1)
        self.assertEqual(characters[0].parameters, ("Θ1",))
        self.assertEqual(dict(characters[0].values), {"Θ1": 0})
        self.assertTrue(characters[0].Check().Passed())

    def testSl2Parameter(self):
        (character,) = reps.FindCharacters(_Sl2(), {"Θ1": Fraction(5, 2)})
        self.assertEqual(character.values["Θ1"], Fraction(5, 2))
        self.assertEqual(character.ToJson()["values"], {"Θ1": "5/2"})

    def testUnknownParameter(self):
        with self.assertRaisesRegex(errors.UsageError, "not free parameters"):
            reps.FindCharacters(_Sl2(), {"Θ2": 1})

    def testSl3PrincipalIsTwoParameterFamily(self):
        presentation = _Build("sl3-principal", 8)
        (character,) = reps.FindCharacters(presentation, {"Θ2": 3})
        self.assertEqual(character.parameters, ("Θ1", "Θ2"))
        self.assertEqual(dict(character.values), {"Θ1": 0, "Θ2": 3})
        self.assertTrue(character.complete)
        self.assertTrue(character.Check().Passed())

    def testSl3Minimal(self):
        presentation = _Build("sl3-minimal", 8)
        characters = [c for c in reps.FindCharacters(presentation) if c.IsRational()]
        self.assertTrue(characters)
        for character in characters:
            for terms in presentation.structure.values():
                self.assertEqual(character.Evaluate(terms), 0)
            self.assertTrue(character.Check().Passed(), str(character.Check()))

    def testShortWindowIsInconclusive(self):
        (character,) = reps.FindCharacters(_Build("sl3-principal", 6))
        self.assertFalse(character.complete)
        self.assertEqual(character.Check().GetStatus(), report.INCONCLUSIVE)

    def testUnitIdeal(self):
        presentation = _Presentation(("Θ1", "Θ2"), {(0, 1): {(): Fraction(1)}}, 4)
        self.assertEqual(reps.FindCharacters(presentation), [])

    def testIrrationalBranch(self):
        presentation = _Presentation(("Θ1", "Θ2"), {(0, 1): {(0, 0): Fraction(1), (): Fraction(-2)}}, 4)
        (character,) = reps.FindCharacters(presentation)
        self.assertFalse(character.IsRational())
        self.assertEqual(character.minimal_polynomial, "Θ1^2 - 2")
        self.assertEqual(character.parameters, ("Θ2",))
        self.assertEqual(character.Check().GetStatus(), report.INCONCLUSIVE)
        with self.assertRaises(errors.UsageError):
            character.Evaluate({(0,): 1})

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=10 ** 6))
    def testRationalRoots(self, seed):
        rng = random.Random(seed)
        first, second = rng.sample(range(-6, 7), 2)
        relation = {(0, 0): Fraction(1), (0,): Fraction(-(first + second)), (): Fraction(first * second)}
        presentation = _Presentation(("Θ1", "Θ2"), {(0, 1): relation}, 4)
        characters = reps.FindCharacters(presentation)
        self.assertEqual(sorted(c.values["Θ1"] for c in characters), sorted([first, second]))
        for character in characters:
            self.assertEqual(character.Evaluate(relation), 0)


class ModuleTest(testutils.BaseTestCase):
    def testTwoDimensionalSl2(self):
        module = reps.FinModule(_Sl2(), 2, [[[0, 1], [0, 0]]])
        result = reps.VerifyModule(module)
        self.assertTrue(result.Passed())
        self.assertEqual(result.elements[0].name, "relations")

    def testNonCommutingMatricesFail(self):
        module = reps.FinModule(_Build("sl3-principal", 8), 2, [[[1, 2], [0, 3]], [[0, 1], [1, 0]]])
        result = reps.VerifyModule(module)
        self.assertTrue(result.HasFailure())
        self.assertEqual(result.GetFirstFailure().name, "[Θ1,Θ2]")

    def testShapes(self):
        with self.assertRaisesRegex(errors.UsageError, "1 matrices for 2 generators"):
            reps.FinModule(_Build("sl3-principal", 8), 1, [[[0]]])
        with self.assertRaisesRegex(errors.UsageError, "2x2 on a 1-dimensional"):
            reps.FinModule(_Sl2(), 1, [[[0, 0], [0, 0]]])

    def testFromCharacter(self):
        (character,) = reps.FindCharacters(_Sl2(), {"Θ1": 7})
        module = reps.FinModule.FromCharacter(character)
        self.assertEqual(module.dimension, 1)
        self.assertEqual(module.ToJson()["matrices"], {"Θ1": [["7"]]})

    def testAction(self):
        module = reps.FinModule(_Sl2(), 2, [[[0, 1], [0, 0]]])
        self.assertEqual(module.Action(()).ToDense(), [[1, 0], [0, 1]])
        self.assertEqual(module.Action((0, 0)).ToDense(), [[0, 0], [0, 0]])


class SkryabinTest(testutils.BaseTestCase):
    def setUp(self):
        super(SkryabinTest, self).setUp()
        (character,) = reps.FindCharacters(_Sl2())
        self.trivial = character.AsModule()

    def testOneDimensional(self):
        truncation = reps.SkryabinTruncation(self.trivial, 6)
        # S(M) is K[h] in degrees 0, 2, 4, ...
        self.assertEqual(truncation.dims, [1, 1, 2, 2, 3, 3, 4])
        self.assertEqual(truncation.whittaker_dims, [1] * 7)
        self.assertTrue(truncation.nilpotent)
        self.assertTrue(reps.SkryabinTruncated(self.trivial, 6).Passed())

    def testTwoDimensional(self):
        module = reps.FinModule(_Sl2(), 2, [[[0, 1], [0, 0]]])
        truncation = reps.SkryabinTruncation(module, 6)
        self.assertEqual(truncation.whittaker_dims, [2] * 7)
        self.assertEqual(truncation.dims, [2, 2, 4, 4, 6, 6, 8])
        self.assertTrue(reps.SkryabinTruncated(module, 6).Passed())

    def testZeroModule(self):
        module = reps.FinModule(_Sl2(), 0, [[]])
        truncation = reps.SkryabinTruncation(module, 4)
        self.assertEqual(truncation.dims, [0] * 5)
        self.assertTrue(reps.SkryabinTruncated(module, 4).Passed())

    def testShortWindow(self):
        self.assertEqual(reps.SkryabinTruncated(self.trivial, 1).GetStatus(), report.INCONCLUSIVE)

    def testBound(self):
        with self.assertRaises(errors.UsageError):
            reps.SkryabinTruncated(self.trivial, 0)


class GkDimTest(testutils.BaseTestCase):
    def testSl2(self):
        (character,) = reps.FindCharacters(_Sl2())
        result = reps.GkDimCheck(character.AsModule(), 8)
        self.assertTrue(result.Passed(), str(result))
        self.assertEqual(result.elements[0].data["degree"], 1)
        self.assertEqual(result.elements[0].data["numerator"], [1, 0, 0, 0, -1, 0, 0, 0, 0])

    def testSmallWindow(self):
        (character,) = reps.FindCharacters(_Sl2())
        self.assertEqual(reps.GkDimCheck(character.AsModule(), 4).GetStatus(), report.INCONCLUSIVE)

    def testZeroModule(self):
        self.assertTrue(reps.GkDimCheck(reps.FinModule(_Sl2(), 0, [[]]), 4).Passed())

    def testSl3Principal(self):
        (character,) = reps.FindCharacters(_Build("sl3-principal", 8))
        result = reps.GkDimCheck(character.AsModule(), 16)
        self.assertTrue(result.Passed(), str(result))
        self.assertEqual(result.elements[0].data["degree"], 3)


class IsotypicTest(testutils.BaseTestCase):
    def testSl2(self):
        result = reps.IsotypicCharacterCheck(liealg.SetupForCase("sl2-principal"), bound=10)
        self.assertTrue(result.Passed(), str(result))
        self.assertEqual(len(result.elements), 4)
        # lambda = 0 is the invariant part, K[S] itself.
        self.assertEqual(result.elements[0].data["direct"], walg.SliceHilbert([4], 10))

    def testIsotypicWeights(self):
        self.assertEqual(dict(reps.IsotypicWeights(0)), {0: 1})
        self.assertEqual(dict(reps.IsotypicWeights(1)), {-1: 2, 1: 2})
        self.assertEqual(dict(reps.IsotypicWeights(2)), {-2: 3, 0: 3, 2: 3})
        for weight in range(6):
            self.assertEqual(sum(reps.IsotypicWeights(weight).values()), (weight + 1) ** 2)

    def testWrongDecompositionFails(self):
        def Collapsed(weight):
            return {weight: (weight + 1) ** 2}

        with mock.patch.object(reps, "IsotypicWeights", Collapsed):
            result = reps.IsotypicCharacterCheck(liealg.SetupForCase("sl2-principal"), weights=(0, 1), bound=8)
        self.assertEqual(result.elements[0].status, report.PASS)
        self.assertEqual(result.GetFirstFailure().name, "lambda = 1")

    def testOnlySl2(self):
        with self.assertRaises(errors.UsageError):
            reps.IsotypicCharacterCheck(liealg.SetupForCase("sl3-principal"))


class OscillatorTest(testutils.BaseTestCase):
    """The kernel of U(sl2) -> Weyl algebra and the character it cuts out."""

    def setUp(self):
        super(OscillatorTest, self).setUp()
        self.presentation = _Sl2()
        self.quotient = self.presentation.quotient
        self.algebra = self.quotient.algebra
        self.shifted = pbw.TraceCasimir(self.algebra, 2) + self.algebra.Scalar(Fraction(3, 8))

    def testKernel(self):
        span = reps.OscillatorIdeal(self.algebra)
        self.assertEqual(len(span), 1)
        self.assertTrue(span.Contains(self.shifted))

    def testMultiplicityOne(self):
        span = reps.OscillatorIdeal(self.algebra)
        setup = self.quotient.setup
        gr = slices.GrOfNCIdeal(self.algebra, span.Basis(), bound=8, max_length=4)
        self.assertTrue(gr.stable)
        self.assertTrue(slices.CheckMultiplicity(gr, setup).Passed())

    def testMatchingCharacter(self):
        terms = self.presentation.Express(walg.CenterImage(self.quotient, self.shifted))
        value = -terms.get((), 0) / terms[(0,)]
        (character,) = reps.FindCharacters(self.presentation, {"Θ1": value})
        self.assertEqual(character.Evaluate(terms), 0)
        self.assertTrue(character.Check().Passed())

    def testOnlySl2(self):
        algebra = pbw.PBWAlgebra.FromSetup(liealg.SetupForCase("sl3-principal"))
        with self.assertRaises(errors.UsageError):
            reps.OscillatorIdeal(algebra)


if __name__ == "__main__":
    testutils.main()
