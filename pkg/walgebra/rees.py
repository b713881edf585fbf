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

"""Rees algebras of U(g) for the Kazhdan filtration.

The Rees algebra is R = sum_i hbar^i F_i U(g). An ideal I of U(g) corresponds to
the hbar-saturated ideal sum_i hbar^i (F_i cap I) of R; setting hbar = 1 gives I
back and setting hbar = 0 gives gr I.

Everything is computed in a window: Kazhdan degree at most `bound` and PBW
length at most `max_length`. Letters of Kazhdan degree zero, such as f in sl2,
make the length bound necessary.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
import logging

from walgebra import errors
from walgebra import pbw
from walgebra import report

logger = logging.getLogger(__name__)


class ReesElement(object):
    """An element sum_i hbar^i a_i of the Rees algebra, with a_i in F_i."""

    def __init__(self, algebra, pieces):
        """Instantiates a ReesElement.

        Args:
          algebra: The PBWAlgebra.
          pieces: Map level -> NCPoly.
        Raises:
          DomainError: If a piece has Kazhdan degree above its level.
        """
        cleaned = {}
        for level, poly in pieces.items():
            if poly.algebra is not algebra:
                raise errors.UsageError("Rees piece from a different PBW algebra")
            if poly.IsZero():
                continue
            if poly.KazhdanDegree() > level:
                raise errors.DomainError(
                    "{} has Kazhdan degree {} above its level {}".format(poly.Format(), poly.KazhdanDegree(), level)
                )
            cleaned[level] = poly
        self.algebra = algebra
        self.pieces = cleaned

    @classmethod
    def Homogenize(cls, poly, level=None):
        """hbar^level * poly; the level defaults to the Kazhdan degree."""
        if poly.IsZero():
            return cls(poly.algebra, {})
        return cls(poly.algebra, {poly.KazhdanDegree() if level is None else level: poly})

    def Specialize(self):
        """The image under hbar = 1."""
        result = self.algebra.Zero()
        for poly in self.pieces.values():
            result = result + poly
        return result

    def Symbol(self):
        """The image under hbar = 0, as {level: homogeneous NCPoly} in gr U(g)."""
        return {level: poly.Top() for level, poly in self.pieces.items() if poly.KazhdanDegree() == level}

    def __mul__(self, other):
        pieces = {}
        for (i, a), (j, b) in itertools.product(self.pieces.items(), other.pieces.items()):
            product = a * b
            pieces[i + j] = pieces[i + j] + product if i + j in pieces else product
        return ReesElement(self.algebra, pieces)

    def __add__(self, other):
        pieces = dict(self.pieces)
        for level, poly in other.pieces.items():
            pieces[level] = pieces[level] + poly if level in pieces else poly
        return ReesElement(self.algebra, pieces)


def _CheckLevels(generators, levels):
    if levels is None:
        levels = [generator.KazhdanDegree() for generator in generators]
    if len(levels) != len(generators):
        raise errors.UsageError("{} levels for {} generators".format(len(levels), len(generators)))
    for generator, level in zip(generators, levels):
        if not generator.IsZero() and generator.KazhdanDegree() > level:
            raise errors.DomainError(
                "Generator {} exceeds its declared filtration level {}".format(generator.Format(), level)
            )
    return list(levels)


def _Factors(algebra, generators, levels, bound, max_length):
    """Yields (u, index, v, level) for the products u g_index v inside the window.

    u and v are PBW monomials and level = deg u + level(g) + deg v.
    """
    for index, (generator, level) in enumerate(zip(generators, levels)):
        if generator.IsZero():
            continue
        room = max_length - generator.StandardDegree()
        if room < 0:
            continue
        slack = min(0, min(algebra.degrees)) * room
        outer = pbw.Monomials(algebra, bound - level - slack, max_length=room)
        for left in outer:
            for right in outer:
                total = algebra.MonomialDegree(left) + level + algebra.MonomialDegree(right)
                if len(left) + len(right) > room or total > bound:
                    continue
                yield left, index, right, total


def IdealProducts(algebra, generators, levels, bound, max_length):
    """Products u g v spanning the two-sided ideal in the window, with their levels.

    Returns:
      A list of (level, NCPoly) with level = deg u + level(g) + deg v.
    """
    products = []
    for left, index, right, level in _Factors(algebra, generators, levels, bound, max_length):
        u = pbw.NCPoly(algebra, {left: 1})
        v = pbw.NCPoly(algebra, {right: 1})
        products.append((level, u * generators[index] * v))
    return products


def IdealSpan(algebra, generators, bound, max_length):
    """F_bound cap I for the two-sided ideal I generated by `generators`, in the window."""
    levels = _CheckLevels(generators, None)
    return pbw.FilteredSpan(algebra, [poly for _, poly in IdealProducts(algebra, generators, levels, bound, max_length)])


class ReesIdeal(object):
    """The ideal of R generated by hbar^level(g) g, in a window.

    Its generators as a vector space are hbar-homogeneous, so the hbar^k
    component is spanned by hbar^(k - l) r over the generators r of level l <= k.
    """

    def __init__(self, algebra, elements, bound):
        self.algebra = algebra
        self.elements = elements
        self.bound = bound
        self._pieces = [(level, poly) for element in elements for level, poly in element.pieces.items()]

    def __len__(self):
        return len(self.elements)

    def Lowest(self):
        return min([level for level, _ in self._pieces] + [0])

    def Component(self, level):
        """The hbar^level component of R, as a subspace of F_level."""
        return pbw.FilteredSpan(self.algebra, [poly for assigned, poly in self._pieces if assigned <= level])

    def NaiveDimension(self, level):
        return len(self.Component(level))

    def Saturation(self, lowest=None):
        """Map level -> span of the hbar^level component of the saturation of R.

        Going down from the top level, the component at k becomes
        R_k + (S_(k+1) cap F_k), which is hbar^-1 S cap B in degree k.
        """
        lowest = self.Lowest() if lowest is None else lowest
        saturated = {}
        above = None
        for level in range(self.bound, lowest - 1, -1):
            polys = self.Component(level).Basis()
            if above is not None:
                polys = polys + above.Basis(level)
            above = pbw.FilteredSpan(self.algebra, polys)
            saturated[level] = above
        return saturated

    def Level(self, level):
        """Basis of the saturated component at `level`, which is F_level cap I."""
        lowest = min(level, self.Lowest())
        return self.Saturation(lowest)[min(level, self.bound)].Basis()


def IdealToRees(algebra, generators, bound, max_length, levels=None):
    """Builds the Rees ideal generated by hbar^level(g) g for the given generators.

    Products are formed in the Rees algebra, hbar^deg(u) u * hbar^level(g) g *
    hbar^deg(v) v, so every product carries its own filtration level.

    Raises:
      DomainError: If a generator exceeds its declared filtration level.
    """
    levels = _CheckLevels(generators, levels)
    homogenized = [ReesElement.Homogenize(generator, level) for generator, level in zip(generators, levels)]
    elements = []
    for left, index, right, _ in _Factors(algebra, generators, levels, bound, max_length):
        u = ReesElement.Homogenize(pbw.NCPoly(algebra, {left: 1}), algebra.MonomialDegree(left))
        v = ReesElement.Homogenize(pbw.NCPoly(algebra, {right: 1}), algebra.MonomialDegree(right))
        elements.append(u * homogenized[index] * v)
    logger.debug("Rees ideal: %d generators up to level %d", len(elements), bound)
    return ReesIdeal(algebra, elements, bound)


def ReesToIdeal(algebra, elements):
    """Specializes Rees elements at hbar = 1 and returns the span they generate."""
    return pbw.FilteredSpan(algebra, [element.Specialize() for element in elements])


def ReesRoundtrip(algebra, generators, bound, max_length, levels=None):
    """Checks ideal -> Rees ideal -> (hbar = 1) against the original ideal.

    The ideal side F_k cap I is computed in U(g) from products u g v. The Rees
    side multiplies in R, saturates, and specializes. Per level it checks that the
    saturation has the dimension of F_k cap I, and that the Rees ideal generated
    at the declared levels is already saturated. Declared levels above the
    Kazhdan degrees leave it unsaturated.

    Args:
      algebra: The PBWAlgebra.
      generators: NCPolys generating a two-sided ideal.
      bound: Kazhdan degree bound of the window.
      max_length: PBW length bound of the window.
      levels: Declared filtration levels; default to the Kazhdan degrees.
    Returns:
      A report.Report with level, specialization, generator and saturation checks.
    Raises:
      DomainError: If a generator exceeds its declared filtration level.
    """
    levels = _CheckLevels(generators, levels)
    products = IdealProducts(algebra, generators, levels, bound, max_length)
    ideal = pbw.FilteredSpan(algebra, [poly for _, poly in products])
    image = IdealToRees(algebra, generators, bound, max_length, levels)
    lowest = min(image.Lowest(), min([degree for degree, _, _ in ideal.rows] + [0]))
    saturation = image.Saturation(lowest)
    result = report.Report(name="rees-roundtrip", tag="Prop 1.6")
    for level in range(lowest, bound + 1):
        expected = ideal.Dimension(level)
        saturated = len(saturation[level])
        result.AddCheck(
            "level {}".format(level),
            expected == saturated,
            detail="dim F_{} cap I = {}, saturated Rees component: {}".format(level, expected, saturated),
            data={"level": level, "ideal": expected, "saturated": saturated, "naive": image.NaiveDimension(level)},
        )

    mismatches = [
        element for element, (_, product) in zip(image.elements, products) if element.Specialize() != product
    ]
    recovered = ReesToIdeal(algebra, image.elements)
    same_span = len(recovered) == len(ideal) and all(ideal.Contains(poly) for poly in recovered.Basis())
    result.AddCheck(
        "hbar = 1",
        not mismatches and same_span,
        detail="{} of {} products differ, dimension {} against {}".format(
            len(mismatches), len(products), len(recovered), len(ideal)
        ),
    )
    for index, generator in enumerate(generators):
        if generator.IsZero():
            continue
        result.AddCheck("generator {}".format(index + 1), recovered.Contains(generator), detail=generator.Format())

    for level in range(lowest, bound + 1):
        naive = image.NaiveDimension(level)
        saturated = len(saturation[level])
        result.AddCheck(
            "saturated at level {}".format(level),
            naive == saturated,
            detail="R has dimension {} at level {}, hbar^-1 R cap B gives {}".format(naive, level, saturated),
        )
    return result


def _Words(algebra, bound, max_length):
    for length in range(max_length + 1):
        for word in itertools.product(range(algebra.dim), repeat=length):
            if sum(algebra.degrees[i] for i in word) <= bound:
                yield word


def SpecializationDims(algebra, bound, max_length):
    """Compares R/(hbar-1)R with U(g) and R/hbar R with gr U(g) degree by degree.

    F_k is spanned by normal forms of all words of degree <= k; its dimension must
    equal the number of PBW monomials of degree <= k. The degree-k symbols of
    words of degree k must span a space of dimension the number of monomials of
    degree exactly k.

    Returns:
      A report.Report with one element per degree.
    """
    words = [(sum(algebra.degrees[i] for i in word), pbw.NormalForm(algebra, word)) for word in _Words(algebra, bound, max_length)]
    monomials = pbw.Monomials(algebra, bound, max_length=max_length)
    lowest = min(algebra.MonomialDegree(m) for m in monomials)
    result = report.Report(name="rees-specializations", tag="Rees")
    for k in range(lowest, bound + 1):
        filtered = len(pbw.FilteredSpan(algebra, [poly for degree, poly in words if degree <= k]))
        expected = sum(1 for m in monomials if algebra.MonomialDegree(m) <= k)
        graded = len(pbw.FilteredSpan(algebra, [poly.Component(k) for degree, poly in words if degree == k]))
        expected_graded = sum(1 for m in monomials if algebra.MonomialDegree(m) == k)
        result.AddCheck(
            "degree {}".format(k),
            filtered == expected and graded == expected_graded,
            detail="hbar=1: {} vs {}, hbar=0: {} vs {}".format(filtered, expected, graded, expected_graded),
            data={"degree": k, "filtered": filtered, "expected": expected, "graded": graded, "expectedGraded": expected_graded},
        )
    return result
