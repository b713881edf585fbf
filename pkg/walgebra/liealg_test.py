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

"""Tests for the liealg module."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
from fractions import Fraction

from walgebra import errors
from walgebra import exact
from walgebra import liealg
from walgebra import testutils


def _Add(*vectors):
    return tuple(sum(values, Fraction(0)) for values in zip(*vectors))


class LieAlgebraTest(testutils.BaseTestCase):
    def assertJacobi(self, algebra):
        zero = algebra.Zero()
        for i, j, k in itertools.combinations(range(algebra.dim), 3):
            x, y, z = algebra.Basis(i), algebra.Basis(j), algebra.Basis(k)
            total = _Add(
                algebra.Bracket(algebra.Bracket(x, y), z),
                algebra.Bracket(algebra.Bracket(y, z), x),
                algebra.Bracket(algebra.Bracket(z, x), y),
            )
            self.assertEqual(total, zero, "Jacobi fails on {}".format((i, j, k)))

    def assertInvariantForm(self, algebra):
        for i, j, k in itertools.product(range(algebra.dim), repeat=3):
            x, y, z = algebra.Basis(i), algebra.Basis(j), algebra.Basis(k)
            self.assertEqual(algebra.Pairing(algebra.Bracket(x, y), z) + algebra.Pairing(y, algebra.Bracket(x, z)), 0)

    def testSl2Brackets(self):
        sl2 = liealg.BuildClassical("A", 1)
        self.assertEqual(sl2.dim, 3)
        self.assertEqual(sl2.labels, ("H1", "E12", "E21"))
        e, h, f = sl2.Element({"E12": 1}), sl2.Element({"H1": 1}), sl2.Element({"E21": 1})
        self.assertEqual(sl2.Bracket(h, e), sl2.Element({"E12": 2}))
        self.assertEqual(sl2.Bracket(e, f), h)
        self.assertEqual(sl2.Bracket(h, f), sl2.Element({"E21": -2}))

    def testSl3JacobiAndForm(self):
        sl3 = liealg.BuildClassical("A", 2)
        self.assertEqual(sl3.dim, 8)
        self.assertJacobi(sl3)
        self.assertInvariantForm(sl3)

    def testSp4FormIsNondegenerate(self):
        sp4 = liealg.BuildClassical("C", 2)
        self.assertEqual(sp4.dim, 10)
        self.assertNotEqual(exact.Determinant(sp4.form), 0)
        self.assertJacobi(sp4)

    def testOrthogonalAlgebras(self):
        so5 = liealg.BuildClassical("B", 2)
        so6 = liealg.BuildClassical("D", 3)
        self.assertEqual(so5.dim, 10)
        self.assertEqual(so6.dim, 15)
        self.assertJacobi(so5)
        self.assertNotEqual(exact.Determinant(so6.form), 0)

    def testUnsupportedType(self):
        with self.assertRaisesRegex(errors.UsageError, "Unsupported Lie algebra type"):
            liealg.BuildClassical("E", 6)
        with self.assertRaisesRegex(errors.UsageError, "Unsupported rank"):
            liealg.BuildClassical("D", 1)
        with self.assertRaises(errors.UsageError):
            liealg.BuildClassical("A", 0)

    def testMatrixRoundTrip(self):
        sp4 = liealg.BuildClassical("C", 2)
        x = sp4.Element({"A12": 2, "B11": Fraction(1, 3), "H2": -1})
        self.assertEqual(sp4.FromMatrix(sp4.MatrixOf(x)), x)
        with self.assertRaises(errors.DomainError):
            sp4.FromMatrix(exact.SparseMat(4, 4, {(0, 0): 1}))

    def testFormat(self):
        sl3 = liealg.BuildClassical("A", 2)
        self.assertEqual(sl3.Format(sl3.Element({"E12": 1, "E23": 1})), "E12 + E23")
        self.assertEqual(sl3.Format(sl3.Element({"H1": Fraction(-1, 2), "E21": 2})), "-1/2*H1 + 2*E21")
        self.assertEqual(sl3.Format(sl3.Zero()), "0")

    def testUnknownLabel(self):
        with self.assertRaisesRegex(errors.UsageError, "Unknown basis label"):
            liealg.BuildClassical("A", 1).Element({"E13": 1})


class JacobsonMorozovTest(testutils.BaseTestCase):
    def testSl2(self):
        sl2 = liealg.BuildClassical("A", 1)
        triple = liealg.JacobsonMorozov(sl2, sl2.Element({"E12": 1}))
        self.assertEqual(triple.h, sl2.Element({"H1": 1}))
        self.assertEqual(triple.f, sl2.Element({"E21": 1}))

    def testSl3Principal(self):
        sl3 = liealg.BuildClassical("A", 2)
        triple = liealg.JacobsonMorozov(sl3, sl3.Element({"E12": 1, "E23": 1}))
        self.assertEqual(triple.h, sl3.Element({"H1": 2, "H2": 2}))
        self.assertEqual(triple.f, sl3.Element({"E21": 2, "E32": 2}))
        liealg.CheckTriple(sl3, triple)

    def testSl3Minimal(self):
        sl3 = liealg.BuildClassical("A", 2)
        triple = liealg.JacobsonMorozov(sl3, sl3.Element({"E13": 1}))
        self.assertEqual(triple.h, sl3.Element({"H1": 1, "H2": 1}))
        self.assertEqual(triple.f, sl3.Element({"E31": 1}))

    def testSp4Subregular(self):
        sp4 = liealg.BuildClassical("C", 2)
        triple = liealg.JacobsonMorozov(sp4, sp4.Element({"B11": 1, "B22": 1}))
        self.assertEqual(triple.h, sp4.Element({"H1": 1, "H2": 1}))
        self.assertEqual(triple.f, sp4.Element({"C11": 1, "C22": 1}))

    def testNotNilpotent(self):
        sl2 = liealg.BuildClassical("A", 1)
        with self.assertRaisesRegex(errors.DomainError, "not nilpotent"):
            liealg.JacobsonMorozov(sl2, sl2.Element({"H1": 1}))

    def testZero(self):
        sl2 = liealg.BuildClassical("A", 1)
        with self.assertRaisesRegex(errors.DomainError, "e = 0"):
            liealg.JacobsonMorozov(sl2, sl2.Zero())

    def testPartitionNilpotent(self):
        sl3 = liealg.BuildClassical("A", 2)
        self.assertEqual(liealg.PartitionNilpotent(sl3, [3]), sl3.Element({"E12": 1, "E23": 1}))
        self.assertEqual(liealg.PartitionNilpotent(sl3, [2, 1]), sl3.Element({"E12": 1}))
        self.assertEqual(liealg.PartitionNilpotent(sl3, [1, 1, 1]), sl3.Zero())
        with self.assertRaisesRegex(errors.UsageError, "not a partition"):
            liealg.PartitionNilpotent(sl3, [2, 2])
        with self.assertRaises(errors.UsageError):
            liealg.PartitionNilpotent(liealg.BuildClassical("C", 2), [2, 2])


class SetupTest(testutils.BaseTestCase):
    def assertSetupInvariants(self, setup):
        algebra = setup.algebra
        self.assertEqual(2 * setup.dim_m, algebra.dim - len(setup.slice_basis))
        for x in setup.m:
            for z in setup.m:
                self.assertEqual(setup.Chi(algebra.Bracket(x, z)), 0)
        for u in setup.y:
            for v in setup.y:
                self.assertEqual(setup.Omega(u, v), 0)
        for vector, degree in setup.slice_basis:
            self.assertGreaterEqual(degree, 2)
            self.assertEqual(algebra.Bracket(setup.triple.e, vector), algebra.Zero())
            self.assertEqual(algebra.Bracket(setup.h_prime, vector), tuple((degree - 2) * v for v in vector))
        self.assertEqual(len(setup.basis), algebra.dim)
        self.assertEqual(list(setup.weights), sorted(setup.weights))

    def testSl2Principal(self):
        setup = liealg.SetupForCase("sl2-principal")
        sl2 = setup.algebra
        self.assertNotIn(-1, setup.grading)
        self.assertEqual(setup.y, ())
        self.assertEqual(setup.m, (sl2.Element({"E21": 1}),))
        self.assertEqual(setup.m_prime, ((sl2.Element({"E21": 1}), 1),))
        self.assertEqual(setup.labels, ("E21", "H1", "E12"))
        self.assertEqual(setup.slice_degrees, [4])
        self.assertSetupInvariants(setup)

    def testSl3Minimal(self):
        setup = liealg.SetupForCase("sl3-minimal")
        sl3 = setup.algebra
        self.assertEqual(list(setup.grading[-1]), [sl3.Element({"E21": 1}), sl3.Element({"E32": 1})])
        self.assertEqual(setup.omega.Get(0, 1), -1)
        self.assertEqual(setup.y, (sl3.Element({"E21": 1}),))
        self.assertEqual(setup.slice_degrees, [2, 3, 3, 4])
        self.assertEqual(setup.dim_m, 2)
        self.assertEqual(setup.n, setup.m)
        self.assertSetupInvariants(setup)

    def testSl3Principal(self):
        setup = liealg.SetupForCase("sl3-principal")
        self.assertEqual(setup.slice_degrees, [4, 6])
        self.assertEqual(setup.dim_m, 3)
        self.assertEqual(setup.labels[:3], ("E31", "E21", "E32"))
        self.assertSetupInvariants(setup)

    def testSl3MinimalEvenGrading(self):
        setup = liealg.SetupForCase("sl3-minimal-even")
        sl3 = setup.algebra
        self.assertNotIn(-1, setup.grading)
        self.assertEqual(setup.slice_degrees, [2, 2, 4, 4])
        self.assertEqual(set(setup.m), {sl3.Element({"E21": 1}), sl3.Element({"E31": 1})})
        self.assertSetupInvariants(setup)

    def testSp4Subregular(self):
        setup = liealg.SetupForCase("sp4-subregular")
        self.assertEqual(setup.slice_degrees, [2, 4, 4, 4])
        self.assertEqual(setup.dim_m, 3)
        self.assertSetupInvariants(setup)

    def testExplicitLagrangian(self):
        case = liealg.ShippedCase("sl3-minimal")
        sl3 = case.algebra
        triple = liealg.JacobsonMorozov(sl3, case.e)
        setup = liealg.BuildSetup(sl3, triple, y=[sl3.Element({"E32": 1})])
        self.assertEqual(setup.y, (sl3.Element({"E32": 1}),))
        self.assertEqual(setup.labels[:2], ("E31", "E32"))
        self.assertSetupInvariants(setup)
        with self.assertRaisesRegex(errors.DomainError, "g\\(-1\\)"):
            liealg.BuildSetup(sl3, triple, y=[sl3.Element({"E12": 1})])

    def testInvalidHPrime(self):
        case = liealg.ShippedCase("sl3-minimal")
        sl3 = case.algebra
        triple = liealg.JacobsonMorozov(sl3, case.e)
        with self.assertRaisesRegex(errors.DomainError, "2e"):
            liealg.BuildSetup(sl3, triple, h_prime=sl3.Zero())
        with self.assertRaisesRegex(errors.DomainError, "commute"):
            liealg.BuildSetup(sl3, triple, h_prime=_Add(triple.h, sl3.Element({"E13": 1})))

    def testInvalidTriple(self):
        sl2 = liealg.BuildClassical("A", 1)
        triple = liealg.SL2Triple(sl2.Element({"E12": 1}), sl2.Element({"H1": 1}), sl2.Element({"E21": 2}))
        with self.assertRaises(errors.DomainError):
            liealg.BuildSetup(sl2, triple)

    def testCoordinates(self):
        setup = liealg.SetupForCase("sl3-minimal")
        x = setup.algebra.Element({"E21": 3, "H2": 1})
        coordinates = setup.Coordinates(x)
        self.assertEqual(exact.LinearCombination(zip(coordinates, setup.basis), setup.algebra.dim), x)

    def testToJson(self):
        payload = liealg.SetupForCase("sl2-principal").ToJson()
        self.assertEqual(payload["sliceDegrees"], [4])
        self.assertEqual(payload["mPrime"], [["E21", "1"]])
        self.assertEqual(payload["h"], "H1")


if __name__ == "__main__":
    testutils.main()
