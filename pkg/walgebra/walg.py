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

"""Finite W-algebras U(g,e) = (U(g)/U(g)m')^N in a Kazhdan-degree window.

The PBW letters of a NilpotentSetup put the basis of m first. A normal
monomial ending in letters of m reduces modulo the left ideal U(g)m' by
replacing each trailing m letter xi with chi(xi), so Q = U(g)/U(g)m' has the
PBW monomials in the remaining letters as a basis. Those letters have positive
Kazhdan degree, hence every filtration level F_k Q is finite dimensional.

The W-algebra is the subspace of Q killed by ad(m), computed as the kernel of
the stacked maps a -> (xi - chi(xi)) a on F_N Q.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import itertools
import logging
from fractions import Fraction

from walgebra import errors
from walgebra import exact
from walgebra import pbw
from walgebra import report

logger = logging.getLogger(__name__)

Generator = collections.namedtuple("Generator", ["name", "poly", "degree", "leading"])


def SliceHilbert(degrees, max_degree):
    """Coefficients h_0..h_max_degree of prod_i 1/(1 - t^degrees[i])."""
    counts = [1] + [0] * max_degree
    for degree in degrees:
        if degree <= 0:
            raise errors.UsageError("Slice degrees must be positive, got {}".format(degree))
        for k in range(degree, max_degree + 1):
            counts[k] += counts[k - degree]
    return counts


class Quotient(object):
    """Q = U(g)/U(g)m' for a NilpotentSetup."""

    def __init__(self, setup, algebra=None):
        """Instantiates a Quotient.

        Args:
          setup: The NilpotentSetup.
          algebra: Optional PBWAlgebra on the adapted basis of `setup`.
        Raises:
          ConsistencyError: If the leading letters do not span m.
        """
        self.setup = setup
        self.algebra = algebra or pbw.PBWAlgebra.FromSetup(setup)
        self.dim_m = setup.dim_m
        leading = {tuple(self.algebra.vectors[i]) for i in range(self.dim_m)}
        if leading != {tuple(vector) for vector in setup.m}:
            raise errors.ConsistencyError("The first {} PBW letters do not span m".format(self.dim_m))
        self.chi = tuple(setup.Chi(self.algebra.vectors[i]) for i in range(self.dim_m))
        self.letters = tuple(range(self.dim_m, self.algebra.dim))
        self._spans = {}

    def ReducePoly(self, poly):
        """Canonical representative of poly + U(g)m' as an NCPoly."""
        if poly.algebra is not self.algebra:
            poly = pbw.Transport(poly, self.algebra)
        result = collections.defaultdict(Fraction)
        for monomial, value in poly.terms.items():
            while monomial and monomial[-1] < self.dim_m:
                value *= self.chi[monomial[-1]]
                monomial = monomial[:-1]
                if not value:
                    break
            if value:
                result[monomial] += value
        return pbw.NCPoly._FromClean(self.algebra, {m: c for m, c in result.items() if c})

    def Element(self, poly):
        return QuotientElem(self, self.ReducePoly(poly))

    def One(self):
        return QuotientElem(self, self.algebra.One())

    def Monomials(self, max_degree, min_degree=None):
        return pbw.Monomials(self.algebra, max_degree, letters=self.letters, min_degree=min_degree)

    def AdImage(self, letter, poly):
        """(xi - chi(xi)) poly in Q, for xi the m letter `letter`; zero iff ad(xi) kills poly."""
        product = self.ReducePoly(self.algebra.Letter(letter) * poly)
        return product - poly.Scale(self.chi[letter])

    def IsWhittaker(self, poly):
        return all(self.AdImage(letter, poly).IsZero() for letter in range(self.dim_m))

    def Multiply(self, a, b):
        """Product of representatives; well defined when b is a Whittaker vector."""
        return self.ReducePoly(a * b)

    def WhittakerSpan(self, max_degree):
        """FilteredSpan of F_max_degree U(g,e), memoized per degree."""
        if max_degree in self._spans:
            return self._spans[max_degree]
        sources = self.Monomials(max_degree)
        equations = collections.OrderedDict()
        for column, monomial in enumerate(sources):
            poly = pbw.NCPoly._FromClean(self.algebra, {monomial: Fraction(1)})
            for letter in range(self.dim_m):
                for target, value in self.AdImage(letter, poly).terms.items():
                    equations.setdefault((letter, target), {})[column] = value
        logger.debug(
            "Whittaker system in degree <= %d: %d unknowns, %d equations", max_degree, len(sources), len(equations)
        )
        kernel = exact.NullSpaceOfRows(list(equations.values()), len(sources))
        polys = [pbw.NCPoly._FromClean(self.algebra, {sources[j]: v for j, v in vector.items()}) for vector in kernel]
        span = pbw.FilteredSpan(self.algebra, polys)
        self._spans[max_degree] = span
        return span

    def __repr__(self):
        return "Quotient({}, dim m = {})".format(self.setup.algebra.name, self.dim_m)


class QuotientElem(object):
    """An element of Q given by its reduced representative."""

    __slots__ = ("quotient", "rep")

    def __init__(self, quotient, rep):
        self.quotient = quotient
        self.rep = rep

    def IsZero(self):
        return self.rep.IsZero()

    def KazhdanDegree(self):
        return self.rep.KazhdanDegree()

    def IsWhittaker(self):
        return self.quotient.IsWhittaker(self.rep)

    def _Other(self, other):
        if isinstance(other, QuotientElem):
            if other.quotient is not self.quotient:
                raise errors.UsageError("Quotient elements of different quotients")
            return other.rep
        return self.quotient.algebra.Scalar(other)

    def __add__(self, other):
        return QuotientElem(self.quotient, self.rep + self._Other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return QuotientElem(self.quotient, self.rep - self._Other(other))

    def __neg__(self):
        return QuotientElem(self.quotient, -self.rep)

    def __mul__(self, other):
        if isinstance(other, QuotientElem):
            return QuotientElem(self.quotient, self.quotient.Multiply(self.rep, self._Other(other)))
        return QuotientElem(self.quotient, self.rep.Scale(other))

    def __rmul__(self, other):
        return QuotientElem(self.quotient, self.rep.Scale(other))

    def __eq__(self, other):
        if isinstance(other, QuotientElem):
            return self.quotient is other.quotient and self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            return self.rep == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.rep)

    def Format(self):
        return self.rep.Format()

    def ToJson(self):
        return self.rep.ToJson()

    def __repr__(self):
        return "QuotientElem({})".format(self.Format())


def Reduce(quotient, poly):
    """The class of poly in Q = U(g)/U(g)m'.

    Args:
      quotient: The Quotient.
      poly: An NCPoly; it is transported first if it lives on another PBW order.
    Returns:
      A QuotientElem whose representative has no m letters.
    """
    return quotient.Element(poly)


def WhittakerBasis(quotient, degree):
    """Echelon basis of F_degree U(g,e) as QuotientElems."""
    if degree < 0:
        return []
    return [QuotientElem(quotient, poly) for poly in quotient.WhittakerSpan(degree).Basis(degree)]


def _GeneratorMonomials(degrees, max_degree, min_length=0):
    """Non-decreasing tuples of generator indices with total degree <= max_degree."""
    found = []

    def Extend(prefix, start, total):
        if len(prefix) >= min_length:
            found.append(prefix)
        for index in range(start, len(degrees)):
            if total + degrees[index] <= max_degree:
                Extend(prefix + (index,), index, total + degrees[index])

    Extend((), 0, 0)
    return sorted(found, key=lambda m: (sum(degrees[i] for i in m), m))


class WPresentation(object):
    """Generators and relations of U(g,e) through Kazhdan degree N.

    Attributes:
      quotient: The Quotient.
      N: The truncation degree.
      graded_dims: OrderedDict degree -> dim F_k / F_{k-1}.
      generators: Tuple of Generator(name, poly, degree, leading monomial).
      structure: OrderedDict (i, j) -> {generator monomial: Rat} giving
        [Theta_i, Theta_j] for every pair inside the window.
      report: The report.Report of the checks made while building.
    """

    def __init__(self, quotient, N, span, graded_dims, generators, report_):
        self.quotient = quotient
        self.N = N
        self.span = span
        self.graded_dims = graded_dims
        self.generators = tuple(generators)
        self.names = tuple(generator.name for generator in self.generators)
        self.degrees = tuple(generator.degree for generator in self.generators)
        self.report = report_
        self.structure = collections.OrderedDict()
        self._products = {(): quotient.algebra.One()}

    def Generator(self, index):
        return QuotientElem(self.quotient, self.generators[index].poly)

    def Product(self, indices):
        """Theta_{i_1} ... Theta_{i_l} in Q, memoized."""
        indices = tuple(indices)
        if indices not in self._products:
            tail = self.Product(indices[1:])
            self._products[indices] = self.quotient.Multiply(self.generators[indices[0]].poly, tail)
        return self._products[indices]

    def Express(self, element, max_degree=None):
        """Writes a Whittaker vector as {ordered generator monomial: Rat}.

        Raises:
          ConsistencyError: If the element is not in the span of the ordered
            generator monomials of degree <= max_degree.
        """
        poly = element.rep if isinstance(element, QuotientElem) else self.quotient.ReducePoly(element)
        if poly.IsZero():
            return {}
        if max_degree is None:
            max_degree = poly.KazhdanDegree()
        monomials = _GeneratorMonomials(self.degrees, max_degree)
        products = [self.Product(m) for m in monomials]
        support = sorted({t for p in products for t in p.terms} | set(poly.terms))
        row_of = {t: r for r, t in enumerate(support)}
        rows = [{} for _ in support]
        for column, product in enumerate(products):
            for t, value in product.terms.items():
                rows[row_of[t]][column] = value
        rhs = [poly.Coefficient(t) for t in support]
        solution = exact.SolveRows(rows, rhs, len(monomials))
        if solution is None:
            raise errors.ConsistencyError(
                "{} is not a polynomial in the generators through degree {}".format(poly.Format(), max_degree)
            )
        return {monomials[j]: value for j, value in sorted(solution.items())}

    def FormatExpression(self, terms):
        ordered = sorted(terms.items(), key=lambda item: (sum(self.degrees[i] for i in item[0]), item[0]), reverse=True)
        return pbw.FormatTerms(ordered, self.names)

    def Commutator(self, a, b):
        return self.quotient.Multiply(a, b) - self.quotient.Multiply(b, a)

    def ToJson(self):
        setup = self.quotient.setup
        return {
            "algebra": setup.algebra.name,
            "nilpotent": setup.algebra.Format(setup.triple.e),
            "N": self.N,
            "gradedDims": {str(k): v for k, v in self.graded_dims.items()},
            "generators": [
                {"name": g.name, "degree": g.degree, "poly": g.poly.Format(), "leading": g.leading}
                for g in self.generators
            ],
            "structureConsts": [
                {"pair": [self.names[i], self.names[j]], "commutator": self.FormatExpression(terms)}
                for (i, j), terms in self.structure.items()
            ],
        }


def _ChooseGenerators(quotient, span, N):
    generators = []
    for degree in range(1, N + 1):
        candidates = [(pivot, poly) for d, pivot, poly in span.rows if d == degree]
        if not candidates:
            continue
        known = list(span.Basis(degree - 1))
        degrees = [g.degree for g in generators]
        for monomial in _GeneratorMonomials(degrees, degree, min_length=2):
            if sum(degrees[i] for i in monomial) != degree:
                continue
            product = generators[monomial[-1]].poly
            for index in reversed(monomial[:-1]):
                product = quotient.Multiply(generators[index].poly, product)
            known.append(product)
        current = pbw.FilteredSpan(quotient.algebra, known)
        for pivot, poly in sorted(candidates):
            if current.Contains(poly):
                continue
            name = "Θ{}".format(len(generators) + 1)
            leading = pbw.FormatMonomial(pivot, quotient.algebra.labels)
            generators.append(Generator(name, poly, degree, leading))
            current = pbw.FilteredSpan(quotient.algebra, current.Basis() + [poly])
    return generators


def BuildPresentation(quotient, N):
    """Computes U(g,e) through Kazhdan degree N and checks gr U(g,e) = K[S].

    Args:
      quotient: The Quotient of the setup.
      N: The truncation degree; at least the largest slice degree.
    Returns:
      A WPresentation.
    Raises:
      UsageError: If N is below the largest slice degree.
      ConsistencyError: If a graded dimension differs from that of K[S], or the
        generator degrees differ from the slice degrees.
    """
    degrees = quotient.setup.slice_degrees
    if N < max(degrees):
        raise errors.UsageError("N = {} is below the largest slice degree {}".format(N, max(degrees)))
    span = quotient.WhittakerSpan(N)
    expected = SliceHilbert(degrees, N)
    result = report.Report(name="w-presentation", tag="Thm 0.1.0")
    graded = collections.OrderedDict()
    for k in range(N + 1):
        graded[k] = span.Dimension(k) - span.Dimension(k - 1)
        result.AddCheck(
            "degree {}".format(k),
            graded[k] == expected[k],
            detail="dim gr_{} U(g,e) = {}, dim K[S]_{} = {}".format(k, graded[k], k, expected[k]),
            data={"degree": k, "w": graded[k], "slice": expected[k]},
        )
    failure = result.GetFirstFailure()
    if failure is not None:
        raise errors.ConsistencyError("Graded dimensions differ from K[S]: {}".format(failure.detail))

    generators = _ChooseGenerators(quotient, span, N)
    generator_degrees = sorted(g.degree for g in generators)
    result.AddCheck(
        "generator degrees",
        generator_degrees == degrees,
        detail="{} vs slice degrees {}".format(generator_degrees, degrees),
    )
    if generator_degrees != degrees:
        raise errors.ConsistencyError("Generator degrees {} differ from slice degrees {}".format(generator_degrees, degrees))

    presentation = WPresentation(quotient, N, span, graded, generators, result)
    for i, j in itertools.combinations(range(len(generators)), 2):
        window = generators[i].degree + generators[j].degree - 2
        if window > N:
            continue
        commutator = presentation.Commutator(generators[i].poly, generators[j].poly)
        presentation.structure[(i, j)] = presentation.Express(commutator, max_degree=window)
    logger.info(
        "U(g,e) for %s through degree %d: %d generators of degrees %s",
        quotient.setup.algebra.name, N, len(generators), generator_degrees,
    )
    return presentation


def CenterImage(quotient, casimir):
    """iota(casimir): the class of a central element of U(g) in U(g,e).

    Raises:
      DomainError: If casimir does not commute with every letter.
    """
    algebra = casimir.algebra
    for letter in range(algebra.dim):
        commutator = pbw.Bracket(casimir, algebra.Letter(letter))
        if not commutator.IsZero():
            raise errors.DomainError(
                "{} is not central: [{}, {}] = {}".format(
                    casimir.Format(), casimir.Format(), algebra.labels[letter], commutator.Format()
                )
            )
    return quotient.Element(casimir)


def CheckCentral(presentation, element):
    """Checks that element commutes with every generator in Q."""
    result = report.Report(name="center-image", tag="Sec 1.2")
    result.AddCheck("whittaker", element.IsWhittaker(), detail=element.Format())
    for generator in presentation.generators:
        commutator = presentation.Commutator(element.rep, generator.poly)
        result.AddCheck(
            "[iota, {}]".format(generator.name), commutator.IsZero(), detail=commutator.Format()
        )
    return result


def CompareWhittakerSpaces(first, second, max_degree):
    """Checks that two quotients by the same m' have the same Whittaker vectors.

    Each basis vector of F_max_degree U(g,e) for `first` is transported to the PBW
    order of `second` and must be a Whittaker vector there, and conversely.
    """
    result = report.Report(name="whittaker-spaces", tag="Prop 3.5")
    for label, source, target in (("first in second", first, second), ("second in first", second, first)):
        failure = None
        basis = source.WhittakerSpan(max_degree).Basis()
        for poly in basis:
            if not target.IsWhittaker(target.ReducePoly(poly)):
                failure = poly.Format()
                break
        result.AddCheck(label, failure is None, detail=failure or "{} vectors".format(len(basis)))
    return result


def _Combine(algebra, basis, vector):
    result = algebra.Zero()
    for index, value in vector.items():
        result = result + basis[index].Scale(value)
    return result


def CenterDimensions(presentation, max_degree):
    """dim of the centralizer of all generators in F_k U(g,e), for k <= max_degree."""
    span = presentation.span
    basis = span.Basis(max_degree)
    equations = collections.OrderedDict()
    for column, poly in enumerate(basis):
        for index, generator in enumerate(presentation.generators):
            for target, value in presentation.Commutator(poly, generator.poly).terms.items():
                equations.setdefault((index, target), {})[column] = value
    kernel = exact.NullSpaceOfRows(list(equations.values()), len(basis))
    central = pbw.FilteredSpan(
        presentation.quotient.algebra,
        [_Combine(presentation.quotient.algebra, basis, vector) for vector in kernel],
    )
    return [central.Dimension(k) for k in range(max_degree + 1)]


def ComparePresentations(first, second, center_degree=None):
    """Checks two presentations for the same (g, e) against each other.

    Compares graded dimensions, generator degrees and the dimensions of the
    centre in each filtration degree up to center_degree.
    """
    result = report.Report(name="presentation-comparison", tag="Thm 0.1.0")
    window = min(first.N, second.N)
    dims = [(first.graded_dims[k], second.graded_dims[k]) for k in range(window + 1)]
    result.AddCheck("graded dimensions", all(a == b for a, b in dims), detail=str(dims))
    result.AddCheck(
        "generator degrees",
        sorted(first.degrees) == sorted(second.degrees),
        detail="{} vs {}".format(sorted(first.degrees), sorted(second.degrees)),
    )
    if center_degree is not None:
        a = CenterDimensions(first, center_degree)
        b = CenterDimensions(second, center_degree)
        result.AddCheck("centre dimensions", a == b, detail="{} vs {}".format(a, b))
    return result
