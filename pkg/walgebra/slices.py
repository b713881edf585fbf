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

"""Associated graded ideals of U(g) and their restriction to the Slodowy slice.

Symbols of elements of U(g) live in K[g] = S(g), whose variables are the PBW
letters with their Kazhdan degrees. The trace form identifies g with g*, so the
coordinate x_i evaluated at v in g is <x_i, v>.

The slice is realized as e + ker ad(f). Restricting a polynomial substitutes
    x_i -> <x_i, e> + sum_j t_j <x_i, f_j>
for a graded basis f_j of ker ad(f); the variable t_j has Kazhdan weight
d_j + 2, which makes the restriction of a homogeneous ideal homogeneous.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import logging
import weakref

from walgebra import errors
from walgebra import ideals
from walgebra import pbw
from walgebra import rees
from walgebra import report

logger = logging.getLogger(__name__)

EXACT = "exact"
INCONCLUSIVE = "inconclusive"


# Rings live as long as the algebra or setup they were built for.
_SYMBOL_RINGS = weakref.WeakKeyDictionary()
_SLICE_RINGS = weakref.WeakKeyDictionary()


def SymbolRing(algebra):
    """K[g] on the letters of a PBWAlgebra, weighted by Kazhdan degree.

    Repeated calls for one algebra return the same ring.
    """
    ring = _SYMBOL_RINGS.get(algebra)
    if ring is None:
        ring = ideals.PolyRing(
            algebra.labels, weights=algebra.degrees, source=algebra.source, vectors=algebra.vectors
        )
        _SYMBOL_RINGS[algebra] = ring
    return ring


def SliceRing(setup):
    """K[S] with one variable t_j per graded basis vector of ker ad(f)."""
    ring = _SLICE_RINGS.get(setup)
    if ring is None:
        names = ["t{}".format(j + 1) for j in range(len(setup.slice_realization))]
        ring = ideals.PolyRing(names, weights=[degree for _, degree in setup.slice_realization])
        _SLICE_RINGS[setup] = ring
    return ring


def Commutative(ring, poly):
    """The image of an NCPoly in S(g) under monomial -> commuting monomial."""
    terms = collections.defaultdict(int)
    for monomial, value in poly.terms.items():
        exponents = [0] * ring.n
        for letter in monomial:
            exponents[letter] += 1
        terms[tuple(exponents)] += value
    return ideals.Poly(ring, terms)


def Symbol(ring, poly):
    """The top Kazhdan component of an NCPoly as an element of S(g)."""
    return Commutative(ring, poly.Top())


def GrOfNCIdeal(algebra, generators, bound, max_length, window=2):
    """The ideal of S(g) generated by the symbols of I cap F_bound.

    The intersections F_k cap I are computed in the window of PBW length at most
    `max_length`, so the result is contained in gr(I). The ideal is marked
    stable when the symbols of degree <= bound - window already generate it.

    Args:
      algebra: The PBWAlgebra.
      generators: NCPolys generating a two-sided ideal I.
      bound: Kazhdan degree bound.
      max_length: PBW length bound of the window.
      window: Degree gap used for the stability test.
    Returns:
      An ideals.GradedIdeal over SymbolRing(algebra).
    Raises:
      UsageError: If a generator has degree above `bound`.
    """
    ring = SymbolRing(algebra)
    for generator in generators:
        if not generator.IsZero() and generator.KazhdanDegree() > bound:
            raise errors.UsageError(
                "bound {} is below the degree {} of {}".format(bound, generator.KazhdanDegree(), generator.Format())
            )
    span = rees.IdealSpan(algebra, generators, bound, max_length)
    symbols = [(degree, Symbol(ring, poly)) for degree, _, poly in span.rows]
    full = ideals.Buchberger([symbol for _, symbol in symbols], ring=ring)
    truncated = ideals.Buchberger([symbol for degree, symbol in symbols if degree <= bound - window], ring=ring)
    stable = truncated == full
    logger.info("gr(I) through degree %d: %d symbols, basis of %d, stable=%s", bound, len(symbols), len(full.basis), stable)
    return ideals.GradedIdeal(ring, full.basis, stable=stable, basis=full.basis)


def SliceImages(ring, setup):
    """Images of the coordinates of K[g] in K[S]."""
    algebra = setup.algebra
    target = SliceRing(setup)
    e = setup.triple.e
    images = []
    for vector in ring.vectors:
        image = target.Scalar(algebra.Pairing(vector, e))
        for j, (direction, _) in enumerate(setup.slice_realization):
            value = algebra.Pairing(vector, direction)
            if value:
                image = image + target.Variable(j).Scale(value)
        images.append(image)
    return images


def SliceRestrict(ideal, setup):
    """J -> (J + I(S)) / I(S) as an ideal of K[S].

    Raises:
      UsageError: If the ideal is not an ideal of K[g] for the algebra of `setup`.
    """
    ring = ideal.ring
    if ring.vectors is None or ring.source is not setup.algebra:
        raise errors.UsageError("The ideal does not live on the coordinate ring of {}".format(setup.algebra.name))
    images = SliceImages(ring, setup)
    target = SliceRing(setup)
    restricted = [generator.Substitute(images, target) for generator in ideal.generators]
    logger.debug("Restricted %d generators to the slice", len(restricted))
    return ideals.GradedIdeal(target, restricted, stable=ideal.stable)


class VarietyReport(object):
    """Dimension and multiplicity of V(I) from the Hilbert series of R/I.

    Attributes:
      dimension: Krull dimension of R/I, -1 for the empty variety.
      multiplicity: Leading coefficient of the standard-graded Hilbert series.
      codimension: dim_Q R/I for a zero-dimensional I, else None.
      positive_dimensional: Whether the multiplicity is the normalized leading
        Hilbert coefficient rather than a length, which is unverified against
        the localization definition.
      status: EXACT, or INCONCLUSIVE when the ideal came from an unstable truncation.
      description: The reduced basis, formatted.
    """

    def __init__(self, ideal):
        self.ideal = ideal
        self.dimension = ideal.KrullDimension()
        self.multiplicity = ideal.Multiplicity()
        self.codimension = ideal.Codimension()
        self.positive_dimensional = self.dimension > 0
        self.status = EXACT if ideal.stable else INCONCLUSIVE
        self.description = [g.Format() for g in ideal.basis]

    def ToJson(self):
        return {
            "status": self.status,
            "dimension": self.dimension,
            "multiplicity": self.multiplicity,
            "codimension": self.codimension,
            "multiplicityVerified": not self.positive_dimensional,
            "ideal": self.description,
            "variables": list(self.ideal.ring.variables),
            "weights": list(self.ideal.ring.weights),
        }

    def __repr__(self):
        return "VarietyReport(dim={}, mult={}, {})".format(self.dimension, self.multiplicity, self.status)


def CheckTransversality(ideal, setup):
    """dim V(J) = dim V(J) cap S + dim G.chi for J with G.chi in V(J)."""
    result = report.Report(name="transversality", tag="Thm 0.2.2")
    restricted = SliceRestrict(ideal, setup)
    orbit = 2 * setup.dim_m
    full_dim = ideal.KrullDimension()
    slice_dim = restricted.KrullDimension()
    status = report.PASS if full_dim == slice_dim + orbit else report.FAIL
    if not (ideal.stable and restricted.stable) and status == report.FAIL:
        status = report.INCONCLUSIVE
    result.Add(
        "dimension",
        status,
        detail="dim V(J) = {}, dim V(J) cap S = {}, dim G.chi = {}".format(full_dim, slice_dim, orbit),
        data={"variety": full_dim, "slice": slice_dim, "orbit": orbit},
    )
    return result


def CheckIntersection(first, second, setup):
    """Restriction to the slice against intersection of two ideals of K[g]."""
    result = report.Report(name="slice-intersection", tag="Thm 0.2.2")
    left = SliceRestrict(ideals.Intersect(first, second), setup)
    right = ideals.Intersect(SliceRestrict(first, setup), SliceRestrict(second, setup))
    result.AddCheck(
        "restrict(I cap J)",
        left == right,
        detail="{} against {}".format([g.Format() for g in left.basis], [g.Format() for g in right.basis]),
    )
    return result


def CheckMultiplicity(ideal, setup, expected=1):
    """mult J = codim J_dagger, read off the restriction of gr J."""
    result = report.Report(name="multiplicity", tag="Prop 3.24")
    variety = VarietyReport(SliceRestrict(ideal, setup))
    if variety.status != EXACT:
        result.AddInconclusive("codimension", detail="gr J did not stabilize")
        return result
    result.AddCheck(
        "codimension",
        variety.codimension == expected,
        detail="codim of the restricted ideal is {}, expected {}".format(variety.codimension, expected),
        data=variety.ToJson(),
    )
    return result


def NilpotentCone(algebra, orders):
    """The ideal of S(g) generated by the symbols of trace Casimirs of the given orders."""
    ring = SymbolRing(algebra)
    return ideals.GradedIdeal(ring, [Symbol(ring, pbw.TraceCasimir(algebra, order)) for order in orders])
