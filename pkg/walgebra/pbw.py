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

"""The universal enveloping algebra U(g) in PBW normal form.

A PBWAlgebra fixes an ordered basis x_0 < x_1 < ... of g, sorted by (ad(h')
weight, input position). A monomial is a non-increasing tuple of letter indices
(i_1 >= i_2 >= ... >= i_l), read left to right, so the letters of m, which have
the lowest weights, stand on the right.

Each letter carries the Kazhdan degree weight + 2; the Kazhdan degree of a
monomial is the sum over its letters, and the standard degree is its length.
The degree of the zero polynomial is BOTTOM, which is below every integer and
absorbs addition.

Products are computed by right insertion of single letters,
    p x_l x_j = (p x_j) x_l + p [x_l, x_j]   for l < j,
memoized per algebra on (monomial, letter).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import functools
import itertools
import logging
import types
from fractions import Fraction

from walgebra import errors
from walgebra import exact
from walgebra import parser

logger = logging.getLogger(__name__)

_ONE = Fraction(1)


@functools.total_ordering
class _Bottom(object):
    """The degree of the zero polynomial."""

    def __eq__(self, other):
        return isinstance(other, _Bottom)

    def __lt__(self, other):
        return not isinstance(other, _Bottom)

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self):
        return hash("BOTTOM")

    def __repr__(self):
        return "BOTTOM"


BOTTOM = _Bottom()


class PBWAlgebra(object):
    """U(g) for a fixed ordered, graded basis of g."""

    def __init__(self, source, vectors, weights, labels):
        """Instantiates a PBWAlgebra.

        Args:
          source: The LieAlgebraData.
          vectors: Basis of g in the coordinates of `source`.
          weights: Integral ad(h') weight of each vector.
          labels: Name of each vector.
        """
        order = sorted(range(len(vectors)), key=lambda i: (weights[i], i))
        self.source = source
        self.vectors = tuple(tuple(vectors[i]) for i in order)
        self.weights = tuple(int(weights[i]) for i in order)
        self.labels = tuple(labels[i] for i in order)
        self.degrees = tuple(weight + 2 for weight in self.weights)
        self.dim = len(self.vectors)
        if self.dim != source.dim:
            raise errors.UsageError("{} vectors for a {}-dimensional algebra".format(self.dim, source.dim))
        self._index = {label: i for i, label in enumerate(self.labels)}

        rows = [{} for _ in range(source.dim)]
        for column, vector in enumerate(self.vectors):
            for k, value in enumerate(vector):
                if value:
                    rows[k][column] = Fraction(value)
        self._coordinate_rows = rows
        if exact.RankOfRows(rows) != self.dim:
            raise errors.UsageError("Vectors do not form a basis")

        brackets = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                coordinates = self.LetterCoordinates(source.Bracket(self.vectors[i], self.vectors[j]))
                if coordinates:
                    brackets[(i, j)] = types.MappingProxyType(coordinates)
                    brackets[(j, i)] = types.MappingProxyType({k: -c for k, c in coordinates.items()})
        self._brackets = brackets
        self._empty = types.MappingProxyType({})
        self._append_cache = {}

    @classmethod
    def FromSetup(cls, setup):
        """U(g) on the adapted basis of a NilpotentSetup; the m letters come first."""
        return cls(setup.algebra, setup.basis, setup.weights, setup.labels)

    @classmethod
    def FromLieAlgebra(cls, algebra, grading=None):
        """U(g) on the basis of `algebra`, graded by ad(grading) when given.

        Raises:
          DomainError: If some basis vector is not an eigenvector of ad(grading).
        """
        weights = []
        for i in range(algebra.dim):
            if grading is None:
                weights.append(0)
                continue
            basis = algebra.Basis(i)
            image = algebra.Bracket(grading, basis)
            weight = image[i]
            if image != tuple(weight * v for v in basis) or weight.denominator != 1:
                raise errors.DomainError("{} is not an integral eigenvector of the grading".format(algebra.labels[i]))
            weights.append(int(weight))
        return cls(algebra, [algebra.Basis(i) for i in range(algebra.dim)], weights, algebra.labels)

    def LetterCoordinates(self, vector):
        """Coordinates of a vector of g in the letter basis, as {letter: Rat}."""
        solution = exact.SolveRows(self._coordinate_rows, list(vector), self.dim)
        if solution is None:
            raise errors.ConsistencyError("Letter basis does not span the algebra")
        return solution

    def BasisBracket(self, i, j):
        return self._brackets.get((i, j), self._empty)

    def Index(self, label):
        if label not in self._index:
            raise errors.UsageError("Unknown letter {!r}".format(label))
        return self._index[label]

    def Zero(self):
        return NCPoly(self)

    def One(self):
        return self.Scalar(1)

    def Scalar(self, value):
        return NCPoly(self, {(): exact.ToRat(value)})

    def Letter(self, letter):
        if not isinstance(letter, int):
            letter = self.Index(letter)
        if not 0 <= letter < self.dim:
            raise errors.UsageError("Letter index {} out of range".format(letter))
        return NCPoly(self, {(letter,): _ONE})

    def FromVector(self, vector):
        """The degree-one element of U(g) given by a vector of g."""
        return NCPoly(self, {(k,): c for k, c in self.LetterCoordinates(vector).items()})

    def Word(self, letters):
        """Normal form of a product of letters, given by index or label."""
        indices = [letter if isinstance(letter, int) else self.Index(letter) for letter in letters]
        return NormalForm(self, indices)

    def MonomialDegree(self, monomial):
        return sum(self.degrees[i] for i in monomial)

    def _Append(self, monomial, j):
        """Normal form of monomial * x_j as a {monomial: Rat} mapping."""
        if not monomial or monomial[-1] >= j:
            return {monomial + (j,): _ONE}
        key = (monomial, j)
        cached = self._append_cache.get(key)
        if cached is not None:
            return cached
        prefix, last = monomial[:-1], monomial[-1]
        result = collections.defaultdict(Fraction)
        for shifted, c in self._Append(prefix, j).items():
            for product, c2 in self._Append(shifted, last).items():
                result[product] += c * c2
        for k, c in self.BasisBracket(last, j).items():
            for product, c2 in self._Append(prefix, k).items():
                result[product] += c * c2
        cleaned = {m: c for m, c in result.items() if c}
        self._append_cache[key] = cleaned
        return cleaned

    def MultiplyMonomials(self, left, right):
        current = {left: _ONE}
        for j in right:
            following = collections.defaultdict(Fraction)
            for monomial, c in current.items():
                for product, c2 in self._Append(monomial, j).items():
                    following[product] += c * c2
            current = {m: c for m, c in following.items() if c}
        return current

    def __repr__(self):
        return "PBWAlgebra({}, letters={})".format(self.source.name, ",".join(self.labels))


class NCPoly(object):
    """An element of U(g) as a {monomial: Rat} map over a PBWAlgebra.

    Values are immutable. Kazhdan and standard degrees are computed once.
    """

    __slots__ = ("algebra", "_terms", "_kazhdan", "_standard")

    def __init__(self, algebra, terms=None):
        cleaned = {}
        for monomial, value in (terms or {}).items():
            monomial = tuple(monomial)
            for a, b in zip(monomial, monomial[1:]):
                if a < b:
                    raise errors.UsageError("Monomial {} is not in normal form".format(monomial))
            if monomial and not (0 <= monomial[-1] and monomial[0] < algebra.dim):
                raise errors.UsageError("Monomial {} has letters out of range".format(monomial))
            value = exact.ToRat(value)
            if value:
                cleaned[monomial] = value
        self.algebra = algebra
        self._terms = types.MappingProxyType(cleaned)
        self._kazhdan = None
        self._standard = None

    @classmethod
    def _FromClean(cls, algebra, terms):
        poly = cls.__new__(cls)
        poly.algebra = algebra
        poly._terms = types.MappingProxyType(terms)
        poly._kazhdan = None
        poly._standard = None
        return poly

    @property
    def terms(self):
        return self._terms

    def IsZero(self):
        return not self._terms

    def Coefficient(self, monomial):
        return self._terms.get(tuple(monomial), Fraction(0))

    def KazhdanDegree(self):
        if self._kazhdan is None:
            self._kazhdan = max((self.algebra.MonomialDegree(m) for m in self._terms), default=BOTTOM)
        return self._kazhdan

    def StandardDegree(self):
        if self._standard is None:
            self._standard = max((len(m) for m in self._terms), default=BOTTOM)
        return self._standard

    def Top(self):
        """The Kazhdan-homogeneous component of top degree."""
        degree = self.KazhdanDegree()
        return NCPoly._FromClean(
            self.algebra, {m: c for m, c in self._terms.items() if self.algebra.MonomialDegree(m) == degree}
        )

    def Component(self, degree):
        return NCPoly._FromClean(
            self.algebra, {m: c for m, c in self._terms.items() if self.algebra.MonomialDegree(m) == degree}
        )

    def SortedTerms(self):
        """Terms by decreasing Kazhdan degree, then decreasing monomial."""
        degree = self.algebra.MonomialDegree
        return sorted(self._terms.items(), key=lambda item: (degree(item[0]), item[0]), reverse=True)

    def Scale(self, value):
        value = exact.ToRat(value)
        if not value:
            return NCPoly._FromClean(self.algebra, {})
        return NCPoly._FromClean(self.algebra, {m: c * value for m, c in self._terms.items()})

    def _Check(self, other):
        if not isinstance(other, NCPoly):
            raise errors.UsageError("Cannot combine NCPoly with {}".format(type(other).__name__))
        if other.algebra is not self.algebra:
            raise errors.UsageError("NCPoly values belong to different PBW algebras")

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            other = self.algebra.Scalar(other)
        self._Check(other)
        result = dict(self._terms)
        for monomial, value in other._terms.items():
            total = result.get(monomial, 0) + value
            if total:
                result[monomial] = total
            else:
                result.pop(monomial, None)
        return NCPoly._FromClean(self.algebra, result)

    __radd__ = __add__

    def __neg__(self):
        return self.Scale(-1)

    def __sub__(self, other):
        if not isinstance(other, NCPoly):
            other = self.algebra.Scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return Multiply(self, other)
        return self.Scale(other)

    def __rmul__(self, other):
        return self.Scale(other)

    def __pow__(self, exponent):
        result = self.algebra.One()
        for _ in range(exponent):
            result = Multiply(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.algebra is other.algebra and dict(self._terms) == dict(other._terms)
        if isinstance(other, (int, Fraction)):
            return dict(self._terms) == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def Format(self):
        return FormatTerms(self.SortedTerms(), self.algebra.labels)

    def ToJson(self):
        return [[str(c), [self.algebra.labels[i] for i in m]] for m, c in self.SortedTerms()]

    def __repr__(self):
        return "NCPoly({})".format(self.Format())

    __str__ = Format


def FormatMonomial(monomial, labels):
    parts = []
    for letter, group in itertools.groupby(monomial):
        power = len(list(group))
        parts.append(labels[letter] if power == 1 else "{}^{}".format(labels[letter], power))
    return " ".join(parts)


def FormatTerms(terms, labels):
    """Renders (monomial, Rat) pairs as e.g. '2*E12 E21 - H1 + 1/2*H1^2'."""
    parts = []
    for monomial, value in terms:
        magnitude = abs(value)
        if not monomial:
            term = str(magnitude)
        elif magnitude == 1:
            term = FormatMonomial(monomial, labels)
        else:
            term = "{}*{}".format(magnitude, FormatMonomial(monomial, labels))
        if not parts:
            parts.append(term if value > 0 else "-" + term)
        else:
            parts.append(("+ " if value > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


def Multiply(a, b):
    """Product in U(g).

    Raises:
      UsageError: If a and b belong to different PBW algebras.
    """
    a._Check(b)
    algebra = a.algebra
    result = collections.defaultdict(Fraction)
    for left, ca in a._terms.items():
        for right, cb in b._terms.items():
            for monomial, c in algebra.MultiplyMonomials(left, right).items():
                result[monomial] += ca * cb * c
    return NCPoly._FromClean(algebra, {m: c for m, c in result.items() if c})


def Bracket(a, b):
    return Multiply(a, b) - Multiply(b, a)


def KazhdanDegree(poly):
    """Kazhdan degree: the maximum over monomials of sum(weight + 2); BOTTOM for 0."""
    return poly.KazhdanDegree()


def _RewriteWords(algebra, words, pick):
    """Rewrites {word: Rat} to normal form, swapping the adjacent inversion chosen by `pick`."""
    done = collections.defaultdict(Fraction)
    pending = collections.OrderedDict()

    def Push(word, value):
        total = pending.get(word, 0) + value
        if total:
            pending[word] = total
        else:
            pending.pop(word, None)

    for word, value in words.items():
        Push(tuple(word), Fraction(value))
    while pending:
        word, value = pending.popitem(last=False)
        violations = [p for p in range(len(word) - 1) if word[p] < word[p + 1]]
        if not violations:
            done[word] += value
            continue
        p = pick(violations)
        i, j = word[p], word[p + 1]
        Push(word[:p] + (j, i) + word[p + 2:], value)
        for k, c in algebra.BasisBracket(i, j).items():
            Push(word[:p] + (k,) + word[p + 2:], value * c)
    return NCPoly._FromClean(algebra, {m: c for m, c in done.items() if c})


def NormalForm(algebra, word, coeff=1):
    """PBW normal form of coeff * x_{w_1} ... x_{w_l}.

    The leftmost adjacent pair x_i x_j with i < j is rewritten as
    x_j x_i + [x_i, x_j] until no such pair remains.
    """
    word = tuple(word)
    for letter in word:
        if not 0 <= letter < algebra.dim:
            raise errors.UsageError("Letter index {} out of range".format(letter))
    return _RewriteWords(algebra, {word: exact.ToRat(coeff)}, min)


def NormalFormBy(algebra, word, pick, coeff=1):
    """Like NormalForm, with `pick` choosing which inversion to rewrite."""
    return _RewriteWords(algebra, {tuple(word): exact.ToRat(coeff)}, pick)


def Monomials(algebra, max_degree, letters=None, max_length=None, min_degree=None):
    """PBW monomials in `letters` with Kazhdan degree <= max_degree.

    Args:
      algebra: The PBWAlgebra.
      max_degree: Upper bound on the Kazhdan degree.
      letters: Allowed letter indices; defaults to all.
      max_length: Upper bound on the length; required when a letter has degree <= 0.
      min_degree: Optional lower bound on the Kazhdan degree.
    Returns:
      Monomials sorted by (Kazhdan degree, monomial).
    """
    letters = sorted(range(algebra.dim) if letters is None else letters, reverse=True)
    if max_length is None and any(algebra.degrees[i] <= 0 for i in letters):
        raise errors.UsageError("A length bound is needed for letters of non-positive degree")
    # Pruning on the partial degree is only sound when no letter lowers it.
    prune = all(algebra.degrees[i] >= 0 for i in letters)
    found = []

    def Extend(prefix, start, degree):
        found.append(prefix)
        if max_length is not None and len(prefix) >= max_length:
            return
        for position in range(start, len(letters)):
            letter = letters[position]
            total = degree + algebra.degrees[letter]
            if total <= max_degree or not prune:
                Extend(prefix + (letter,), position, total)

    Extend((), 0, 0)
    found = [m for m in found if algebra.MonomialDegree(m) <= max_degree]
    if min_degree is not None:
        found = [m for m in found if algebra.MonomialDegree(m) >= min_degree]
    return sorted(found, key=lambda m: (algebra.MonomialDegree(m), m))


class FilteredSpan(object):
    """Reduced echelon basis of a span of NCPolys, compatible with the Kazhdan filtration.

    Columns are ordered by decreasing Kazhdan degree, so the rows whose pivot has
    degree <= k span (span of the inputs) intersected with F_k.
    """

    def __init__(self, algebra, polys):
        self.algebra = algebra
        polys = [poly for poly in polys if not poly.IsZero()]
        degree = algebra.MonomialDegree
        monomials = sorted({m for poly in polys for m in poly.terms}, key=lambda m: (degree(m), m), reverse=True)
        column = {m: i for i, m in enumerate(monomials)}
        echelon = exact.RowEchelonRows([{column[m]: c for m, c in poly.terms.items()} for poly in polys])
        self.rows = []
        for pivot, row in zip(echelon.pivots, echelon.rows):
            poly = NCPoly._FromClean(algebra, {monomials[i]: c for i, c in row.items()})
            self.rows.append((degree(monomials[pivot]), monomials[pivot], poly))

    def __len__(self):
        return len(self.rows)

    def Dimension(self, level=None):
        if level is None:
            return len(self.rows)
        return sum(1 for degree, _, _ in self.rows if degree <= level)

    def Basis(self, level=None):
        return [poly for degree, _, poly in self.rows if level is None or degree <= level]

    def Reduce(self, poly):
        """Remainder of poly after eliminating every pivot monomial."""
        for _, pivot, row in self.rows:
            value = poly.Coefficient(pivot)
            if value:
                poly = poly - row.Scale(value)
        return poly

    def Contains(self, poly):
        return self.Reduce(poly).IsZero()


def TraceCasimir(algebra, order):
    """The Casimir element sum tr(b^{i_1} ... b^{i_p}) x_{i_1} ... x_{i_p}.

    b^i is the dual basis for the trace form of the defining representation.
    Order 2 gives the quadratic Casimir; for sl_2 it is ef + fe + h^2/2.
    """
    source = algebra.source
    if source.matrices is None:
        raise errors.UsageError("{} has no defining representation".format(source.name))
    if order < 1:
        raise errors.UsageError("Casimir order must be positive")
    gram = exact.SparseMat(
        algebra.dim, algebra.dim,
        {(i, j): source.Pairing(algebra.vectors[i], algebra.vectors[j]) for i in range(algebra.dim) for j in range(algebra.dim)},
    )
    inverse_columns = []
    for i in range(algebra.dim):
        unit = [Fraction(0)] * algebra.dim
        unit[i] = _ONE
        column = exact.Solve(gram, unit)
        if column is None:
            raise errors.DomainError("The trace form is degenerate on {}".format(source.name))
        inverse_columns.append(column)
    letter_matrices = [source.MatrixOf(vector) for vector in algebra.vectors]
    size = letter_matrices[0].rows
    dual = []
    for i in range(algebra.dim):
        entries = collections.defaultdict(Fraction)
        for j, coefficient in enumerate(inverse_columns[i]):
            if coefficient:
                for key, value in letter_matrices[j].Items():
                    entries[key] += coefficient * value
        dual.append(exact.SparseMat(size, size, entries))

    words = {}

    def Extend(word, product):
        if len(word) == order:
            trace = sum((product.Get(r, r) for r in range(size)), Fraction(0))
            if trace:
                words[word] = trace
            return
        for i in range(algebra.dim):
            Extend(word + (i,), exact.MatMul(product, dual[i]) if word else dual[i])

    Extend((), None)
    result = algebra.Zero()
    for word, trace in sorted(words.items()):
        result = result + _RewriteWords(algebra, {word: trace}, min)
    logger.debug("Casimir of order %d has %d terms", order, len(result.terms))
    return result


def Transport(poly, target):
    """Rewrites an element of U(g) in the PBW basis of another letter order."""
    source = poly.algebra
    if source.source is not target.source:
        raise errors.UsageError("Transport between different Lie algebras")
    images = [target.FromVector(vector) for vector in source.vectors]
    result = target.Zero()
    for monomial, value in poly.terms.items():
        term = target.Scalar(value)
        for letter in monomial:
            term = Multiply(term, images[letter])
        result = result + term
    return result


def ParseNCPoly(algebra, text, source="<input>"):
    """Parses text such as '3/2*E21^2 H1 + E12' into an NCPoly.

    Factors are multiplied in the order written.

    Raises:
      ParseError: On malformed text or an unknown letter.
    """
    result = algebra.Zero()
    for coefficient, factors in parser.ParsePolynomial(text, source=source):
        term = algebra.Scalar(coefficient)
        for name, power, column in factors:
            if name not in algebra._index:
                raise errors.ParseError("Unknown letter {!r}".format(name), column=column, source=source)
            term = term * algebra.Letter(name) ** power
        result = result + term
    return result
