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

"""Commutative polynomial ideals over Q: Groebner bases and Hilbert data.

A PolyRing fixes an ordered list of variables, their Kazhdan weights and a
monomial order. A monomial is a tuple of exponents; a Poly is an immutable
{monomial: Rat} map over a ring.

The orders compare a graded degree first. When every Kazhdan weight is positive
the weighted degree is used, otherwise the standard degree, so that the order
is a well-order in both cases. Ties are broken reverse lexicographically with
the first variable largest ('degrevlex'), or lexicographically ('lex'). An
elimination order compares the first `eliminate` variables before the rest.

Buchberger's algorithm runs with the sugar strategy and the product and chain
criteria, and returns the reduced, monic basis sorted by leading monomial.

Hilbert series of R/I are computed from the leading monomials by the pivot
recursion
    HS(R/I) = HS(R/(I + x)) + z^w(x) HS(R/(I : x)),
as numerators over prod (1 - z^w_i).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import logging
import types
from fractions import Fraction

import sympy

from walgebra import errors
from walgebra import exact
from walgebra import parser
from walgebra import pbw

logger = logging.getLogger(__name__)

DEGREVLEX = "degrevlex"
LEX = "lex"
ORDERS = (DEGREVLEX, LEX)

Z = sympy.Symbol("z")


class PolyRing(object):
    """Q[x_1, ..., x_n] with Kazhdan weights and a monomial order.

    Attributes:
      variables: Variable names, first variable largest.
      weights: Kazhdan weight of each variable.
      grading: Weights used by the order and by Hilbert data.
      order: DEGREVLEX or LEX.
      eliminate: Number of leading variables eliminated first.
      source: Optional LieAlgebraData when the variables are coordinates on g.
      vectors: Optional vector of g for each variable.
    """

    def __init__(self, variables, weights=None, order=DEGREVLEX, eliminate=0, source=None, vectors=None):
        self.variables = tuple(variables)
        self.n = len(self.variables)
        if len(set(self.variables)) != self.n:
            raise errors.UsageError("Repeated variable names in {}".format(", ".join(self.variables)))
        self.weights = tuple(int(w) for w in (weights if weights is not None else [1] * self.n))
        if len(self.weights) != self.n:
            raise errors.UsageError("{} weights for {} variables".format(len(self.weights), self.n))
        if order not in ORDERS:
            raise errors.UsageError("Unknown monomial order {!r}".format(order))
        if not 0 <= eliminate <= self.n:
            raise errors.UsageError("Cannot eliminate {} of {} variables".format(eliminate, self.n))
        self.order = order
        self.eliminate = eliminate
        self.grading = self.weights if all(w > 0 for w in self.weights) else (1,) * self.n
        self.source = source
        self.vectors = tuple(vectors) if vectors is not None else None
        self._index = {name: i for i, name in enumerate(self.variables)}

    def Index(self, name):
        if name not in self._index:
            raise errors.UsageError("Unknown variable {!r}".format(name))
        return self._index[name]

    def Degree(self, monomial):
        return sum(g * a for g, a in zip(self.grading, monomial))

    def Weight(self, monomial):
        return sum(w * a for w, a in zip(self.weights, monomial))

    def _BlockKey(self, monomial, start, stop):
        block = monomial[start:stop]
        if self.order == LEX:
            return tuple(block)
        degree = sum(g * a for g, a in zip(self.grading[start:stop], block))
        return (degree, tuple(-a for a in reversed(block)))

    def Key(self, monomial):
        """Sort key; larger keys are larger monomials."""
        if self.eliminate:
            return (self._BlockKey(monomial, 0, self.eliminate), self._BlockKey(monomial, self.eliminate, self.n))
        return self._BlockKey(monomial, 0, self.n)

    def Zero(self):
        return Poly(self)

    def One(self):
        return self.Scalar(1)

    def Scalar(self, value):
        return Poly(self, {(0,) * self.n: value})

    def Variable(self, name):
        exponents = [0] * self.n
        exponents[name if isinstance(name, int) else self.Index(name)] = 1
        return Poly(self, {tuple(exponents): 1})

    def Monomial(self, exponents, value=1):
        return Poly(self, {tuple(exponents): value})

    def WithEliminationVariable(self, name="t_"):
        """The ring with a new variable `name` in front, eliminated first."""
        if name in self._index:
            raise errors.UsageError("Variable {!r} already exists".format(name))
        return PolyRing((name,) + self.variables, (1,) + self.grading, order=self.order, eliminate=1)

    def __repr__(self):
        return "PolyRing({}; {})".format(", ".join(self.variables), self.order)


class Poly(object):
    """An element of a PolyRing."""

    __slots__ = ("ring", "_terms", "_leading")

    def __init__(self, ring, terms=None):
        cleaned = {}
        for monomial, value in (terms or {}).items():
            monomial = tuple(int(a) for a in monomial)
            if len(monomial) != ring.n or min(monomial, default=0) < 0:
                raise errors.UsageError("Bad exponent vector {} for {}".format(monomial, ring))
            value = exact.ToRat(value)
            if value:
                cleaned[monomial] = value
        self.ring = ring
        self._terms = types.MappingProxyType(cleaned)
        self._leading = None

    @classmethod
    def _FromClean(cls, ring, terms):
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = types.MappingProxyType(terms)
        poly._leading = None
        return poly

    @property
    def terms(self):
        return self._terms

    def IsZero(self):
        return not self._terms

    def IsConstant(self):
        return all(not any(m) for m in self._terms)

    def Coefficient(self, monomial):
        return self._terms.get(tuple(monomial), Fraction(0))

    def LeadingMonomial(self):
        if self._leading is None:
            if not self._terms:
                raise errors.UsageError("The zero polynomial has no leading monomial")
            self._leading = max(self._terms, key=self.ring.Key)
        return self._leading

    def LeadingCoefficient(self):
        return self._terms[self.LeadingMonomial()]

    def Degree(self):
        """Largest graded degree of a term; -1 for zero."""
        return max((self.ring.Degree(m) for m in self._terms), default=-1)

    def IsHomogeneous(self):
        """Whether every term has the same Kazhdan weight."""
        return len({self.ring.Weight(m) for m in self._terms}) <= 1

    def Monic(self):
        return self.Scale(1 / self.LeadingCoefficient()) if self._terms else self

    def Scale(self, value):
        value = exact.ToRat(value)
        if not value:
            return Poly._FromClean(self.ring, {})
        return Poly._FromClean(self.ring, {m: c * value for m, c in self._terms.items()})

    def ShiftBy(self, monomial, value=1):
        """value * x^monomial * self."""
        value = exact.ToRat(value)
        return Poly._FromClean(
            self.ring, {tuple(a + b for a, b in zip(m, monomial)): c * value for m, c in self._terms.items()}
        )

    def SortedTerms(self):
        return sorted(self._terms.items(), key=lambda item: self.ring.Key(item[0]), reverse=True)

    def _Coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise errors.UsageError("Polys belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.Scalar(other)
        return None

    def __add__(self, other):
        other = self._Coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for m, c in other._terms.items():
            value = result.get(m, 0) + c
            if value:
                result[m] = value
            else:
                result.pop(m, None)
        return Poly._FromClean(self.ring, result)

    __radd__ = __add__

    def __neg__(self):
        return self.Scale(-1)

    def __sub__(self, other):
        other = self._Coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._Coerce(other)
        if other is None:
            return NotImplemented
        result = collections.defaultdict(Fraction)
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                result[tuple(x + y for x, y in zip(a, b))] += ca * cb
        return Poly._FromClean(self.ring, {m: c for m, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise errors.UsageError("Exponent must be a non-negative integer")
        result = self.ring.One()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._Coerce(other) if isinstance(other, (Poly, int, Fraction)) else None
        if other is None:
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def Substitute(self, images, ring):
        """Replaces x_i by images[i], a Poly over `ring`."""
        if len(images) != self.ring.n:
            raise errors.UsageError("{} images for {} variables".format(len(images), self.ring.n))
        powers = [[ring.One()] for _ in images]
        result = ring.Zero()
        for monomial, value in self._terms.items():
            term = ring.Scalar(value)
            for i, a in enumerate(monomial):
                while len(powers[i]) <= a:
                    powers[i].append(powers[i][-1] * images[i])
                if a:
                    term = term * powers[i][a]
            result = result + term
        return result

    def Format(self):
        terms = [(_Letters(m), c) for m, c in self.SortedTerms()]
        return pbw.FormatTerms(terms, self.ring.variables)

    def ToJson(self):
        return self.Format()

    def __repr__(self):
        return "Poly({})".format(self.Format())

    __str__ = Format


def _Letters(monomial):
    return tuple(i for i, a in enumerate(monomial) for _ in range(a))


def ParsePoly(ring, text, source="<input>"):
    """Parses text such as 'x^2 + 3/2*x y' over `ring`.

    Raises:
      ParseError: On malformed text or an unknown variable.
    """
    result = ring.Zero()
    for coefficient, factors in parser.ParsePolynomial(text, source=source):
        exponents = [0] * ring.n
        for name, power, column in factors:
            if name not in ring._index:
                raise errors.ParseError("Unknown variable {!r}".format(name), column=column, source=source)
            exponents[ring._index[name]] += power
        result = result + Poly(ring, {tuple(exponents): coefficient})
    return result


def _Divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _Lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _Coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def Reduce(poly, basis):
    """Fully reduces poly modulo basis; returns the remainder."""
    ring = poly.ring
    if not basis:
        return poly
    leading = [(g.LeadingMonomial(), g.LeadingCoefficient(), g) for g in basis]
    pending = dict(poly.terms)
    remainder = {}
    while pending:
        monomial = max(pending, key=ring.Key)
        value = pending[monomial]
        for lead, lead_value, g in leading:
            if _Divides(lead, monomial):
                shift = tuple(y - x for x, y in zip(lead, monomial))
                factor = value / lead_value
                for m, c in g.terms.items():
                    target = tuple(a + b for a, b in zip(m, shift))
                    updated = pending.get(target, 0) - factor * c
                    if updated:
                        pending[target] = updated
                    else:
                        pending.pop(target, None)
                break
        else:
            remainder[monomial] = value
            del pending[monomial]
    return Poly._FromClean(ring, remainder)


def _SPoly(f, g):
    lf, lg = f.LeadingMonomial(), g.LeadingMonomial()
    lcm = _Lcm(lf, lg)
    left = f.ShiftBy(tuple(a - b for a, b in zip(lcm, lf)), 1 / f.LeadingCoefficient())
    right = g.ShiftBy(tuple(a - b for a, b in zip(lcm, lg)), 1 / g.LeadingCoefficient())
    return left - right


def _Interreduce(ring, basis):
    basis = sorted(basis, key=lambda g: ring.Key(g.LeadingMonomial()))
    minimal = []
    for g in basis:
        if not any(_Divides(h.LeadingMonomial(), g.LeadingMonomial()) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lead = g.LeadingMonomial()
        tail = Reduce(g - ring.Monomial(lead, g.LeadingCoefficient()), others)
        reduced.append((ring.Monomial(lead, g.LeadingCoefficient()) + tail).Monic())
    return reduced


def _GroebnerBasis(ring, generators):
    basis = []
    sugar = []
    pairs = {}
    processed = 0

    def Add(poly, poly_sugar):
        poly = poly.Monic()
        index = len(basis)
        basis.append(poly)
        sugar.append(poly_sugar)
        lead = poly.LeadingMonomial()
        for k in range(index):
            other = basis[k].LeadingMonomial()
            lcm = _Lcm(lead, other)
            pair_sugar = max(
                sugar[k] + ring.Degree(lcm) - ring.Degree(other), poly_sugar + ring.Degree(lcm) - ring.Degree(lead)
            )
            pairs[(k, index)] = (pair_sugar, lcm)

    def Pending(i, j):
        return (min(i, j), max(i, j)) in pairs

    def Skip(i, j, lcm):
        if _Coprime(basis[i].LeadingMonomial(), basis[j].LeadingMonomial()):
            return True
        for k in range(len(basis)):
            if k in (i, j) or not _Divides(basis[k].LeadingMonomial(), lcm):
                continue
            if not Pending(i, k) and not Pending(j, k):
                return True
        return False

    for generator in sorted(generators, key=lambda g: (g.Degree(), ring.Key(g.LeadingMonomial()))):
        remainder = Reduce(generator, basis)
        if remainder.IsZero():
            continue
        if remainder.IsConstant():
            return [ring.One()]
        Add(remainder, generator.Degree())
        while pairs:
            (i, j), (pair_sugar, lcm) = min(pairs.items(), key=lambda item: (item[1][0], ring.Key(item[1][1])))
            del pairs[(i, j)]
            if Skip(i, j, lcm):
                continue
            processed += 1
            remainder = Reduce(_SPoly(basis[i], basis[j]), basis)
            if remainder.IsZero():
                continue
            if remainder.IsConstant():
                return [ring.One()]
            Add(remainder, pair_sugar)
    logger.debug("Buchberger: %d pairs reduced, %d basis elements before interreduction", processed, len(basis))
    return _Interreduce(ring, basis)


class GradedIdeal(object):
    """An ideal of a PolyRing, with its reduced Groebner basis computed on demand.

    Attributes:
      ring: The PolyRing.
      generators: The given generators, zeros dropped.
      stable: False when the generators come from a truncation whose Hilbert
        data did not stabilize.
    """

    def __init__(self, ring, generators, stable=True, basis=None):
        generators = list(generators)
        for generator in generators:
            if generator.ring is not ring:
                raise errors.UsageError("Generator {} does not belong to {}".format(generator, ring))
        self.ring = ring
        self.generators = tuple(g for g in generators if not g.IsZero())
        self.stable = stable
        self._basis = tuple(basis) if basis is not None else None

    @property
    def basis(self):
        if self._basis is None:
            self._basis = tuple(_GroebnerBasis(self.ring, self.generators))
            logger.info("Groebner basis of %d generators has %d elements", len(self.generators), len(self._basis))
        return self._basis

    def LeadingMonomials(self):
        return [g.LeadingMonomial() for g in self.basis]

    def IsZero(self):
        return not self.generators

    def IsUnit(self):
        return any(g.IsConstant() for g in self.basis)

    def Reduce(self, poly):
        return Reduce(poly, self.basis)

    def Contains(self, poly):
        return self.Reduce(poly).IsZero()

    def IsHomogeneous(self):
        return all(g.IsHomogeneous() for g in self.basis)

    def __eq__(self, other):
        if not isinstance(other, GradedIdeal):
            return NotImplemented
        return self.ring is other.ring and self.basis == other.basis

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def HilbertNumerator(self, weights=None):
        """Numerator of the Hilbert series of R/in(I) as a sympy Poly in Z."""
        return HilbertNumerator(self.LeadingMonomials(), weights or self.ring.grading)

    def HilbertFunction(self, bound, weights=None):
        """dim (R/I)_k for k = 0..bound, graded by `weights` (default: the ring grading)."""
        weights = weights or self.ring.grading
        return ExpandSeries(self.HilbertNumerator(weights), weights, bound)

    def StandardMonomials(self, degree, weights=None):
        """Monomials of the given degree outside the leading-term ideal."""
        weights = weights or self.ring.grading
        leading = self.LeadingMonomials()
        return [m for m in MonomialsOfDegree(weights, degree) if not any(_Divides(l, m) for l in leading)]

    def KrullDimension(self):
        """Dimension of R/I; -1 for the unit ideal."""
        return PoleData(self.HilbertNumerator((1,) * self.ring.n), self.ring.n)[0]

    def Multiplicity(self):
        """Leading coefficient of the standard-graded Hilbert series, as an integer."""
        return PoleData(self.HilbertNumerator((1,) * self.ring.n), self.ring.n)[1]

    def Codimension(self):
        """dim_Q R/I when finite, else None."""
        if self.KrullDimension() > 0:
            return None
        return self.Multiplicity()

    def ToJson(self):
        return {
            "variables": list(self.ring.variables),
            "weights": list(self.ring.weights),
            "order": self.ring.order,
            "generators": [g.ToJson() for g in self.generators],
            "basis": [g.ToJson() for g in self.basis],
        }

    def __repr__(self):
        return "GradedIdeal({})".format(", ".join(g.Format() for g in self.generators) or "0")


def Buchberger(generators, ring=None):
    """The ideal generated by `generators` with its reduced Groebner basis.

    Args:
      generators: Polys over one ring.
      ring: The ring; needed only when `generators` is empty.
    Returns:
      A GradedIdeal whose basis has been computed.
    Raises:
      UsageError: If no ring can be determined or the generators mix rings.
    """
    generators = list(generators)
    if ring is None:
        if not generators:
            raise errors.UsageError("Buchberger needs a ring for an empty generator list")
        ring = generators[0].ring
    for generator in generators:
        if generator.ring is not ring:
            raise errors.UsageError("Generator {} does not belong to {}".format(generator, ring))
    return GradedIdeal(ring, generators, basis=_GroebnerBasis(ring, [g for g in generators if not g.IsZero()]))


def _Minimalize(monomials):
    minimal = []
    for m in sorted(set(monomials), key=sum):
        if not any(_Divides(g, m) for g in minimal):
            minimal.append(m)
    return minimal


def _IsTerminal(monomials):
    return sum(1 for m in monomials if sum(1 for a in m if a) > 1) <= 1


def _TerminalNumerator(monomials, weights):
    powers = {}
    mixed = None
    for m in monomials:
        support = [i for i, a in enumerate(m) if a]
        if len(support) == 1:
            powers[support[0]] = m[support[0]]
        else:
            mixed = m
    numerator = sympy.Poly(1, Z)
    for i, a in powers.items():
        numerator *= sympy.Poly(1 - Z ** (a * weights[i]), Z)
    if mixed is None:
        return numerator
    colon = sympy.Poly(Z ** sum(w * a for w, a in zip(weights, mixed)), Z)
    for i, a in powers.items():
        colon *= sympy.Poly(1 - Z ** (max(a - mixed[i], 0) * weights[i]), Z)
    return numerator - colon


def HilbertNumerator(monomials, weights):
    """N(z) with HS(R/(monomials)) = N(z) / prod (1 - z^w_i).

    Raises:
      UsageError: If some weight is not positive.
    """
    weights = tuple(weights)
    if any(w <= 0 for w in weights):
        raise errors.UsageError("Hilbert series need positive weights, got {}".format(list(weights)))
    monomials = _Minimalize(tuple(m) for m in monomials)
    if any(not any(m) for m in monomials):
        return sympy.Poly(0, Z)
    if _IsTerminal(monomials):
        return _TerminalNumerator(monomials, weights)
    mixed = [m for m in monomials if sum(1 for a in m if a) > 1]
    counts = [sum(1 for m in mixed if m[j]) for j in range(len(weights))]
    j = counts.index(max(counts))
    unit = tuple(1 if i == j else 0 for i in range(len(weights)))
    left = [m for m in monomials if not m[j]] + [unit]
    right = [tuple(max(a - 1, 0) if i == j else a for i, a in enumerate(m)) for m in monomials]
    return HilbertNumerator(left, weights) + sympy.Poly(Z ** weights[j], Z) * HilbertNumerator(right, weights)


def ExpandSeries(numerator, weights, bound):
    """Coefficients of z^0..z^bound in numerator / prod (1 - z^w)."""
    coefficients = [0] * (bound + 1)
    for (power,), value in numerator.terms():
        if power <= bound:
            coefficients[power] += int(value)
    for w in weights:
        for k in range(w, bound + 1):
            coefficients[k] += coefficients[k - w]
    return coefficients


def PoleData(numerator, n):
    """(order of the pole at z = 1, Q(1)) for numerator / (1 - z)^n."""
    if numerator.is_zero:
        return -1, 0
    factor = sympy.Poly(1 - Z, Z)
    order = n
    while order > 0:
        quotient, remainder = sympy.div(numerator, factor)
        if not remainder.is_zero:
            break
        numerator = quotient
        order -= 1
    return order, int(numerator.eval(1))


def MonomialsOfDegree(weights, degree):
    """Exponent vectors of weighted degree exactly `degree`, in lex order."""
    found = []

    def Extend(prefix, remaining):
        i = len(prefix)
        if i == len(weights):
            if remaining == 0:
                found.append(tuple(prefix))
            return
        for a in range(remaining // weights[i] + 1):
            Extend(prefix + [a], remaining - a * weights[i])

    if degree >= 0:
        Extend([], degree)
    return found


def Intersect(first, second):
    """I cap J by eliminating t from t I + (1 - t) J.

    Raises:
      UsageError: If the ideals live in different rings.
    """
    if first.ring is not second.ring:
        raise errors.UsageError("Cannot intersect ideals of different rings")
    ring = first.ring
    if first.IsZero() or second.IsZero():
        return GradedIdeal(ring, [])
    extended = ring.WithEliminationVariable()
    t = extended.Variable(0)

    def Lift(poly):
        return Poly._FromClean(extended, {(0,) + m: c for m, c in poly.terms.items()})

    generators = [t * Lift(g) for g in first.basis] + [(1 - t) * Lift(g) for g in second.basis]
    eliminated = _GroebnerBasis(extended, generators)
    kept = [Poly._FromClean(ring, {m[1:]: c for m, c in g.terms.items()}) for g in eliminated if not any(m[0] for m in g.terms)]
    logger.debug("Intersection: %d of %d basis elements are free of t", len(kept), len(eliminated))
    return GradedIdeal(ring, kept, stable=first.stable and second.stable)
