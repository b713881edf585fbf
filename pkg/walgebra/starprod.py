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

"""Polynomial star products given by a constant bivector.

A StarContext fixes commuting variables x_0, ..., x_{n-1} with integer weights
and a constant bivector P. Elements of K[V][hbar] are StarPoly values: maps from
(exponents, hbar power) to Rat. The Moyal-Weyl product is

    f * g = sum_j (hbar/2)^j / j! P^j(f, g),

where P^j is the j-fold contraction
    P^j(f, g) = sum P_{a_1 b_1} ... P_{a_j b_j} (d_{a_1} ... d_{a_j} f)(d_{b_1} ... d_{b_j} g).
On polynomials the series stops at j = min(deg f, deg g).

The `*` operator on StarPoly values is the commutative product of K[V][hbar];
the star product is Moyal(f, g).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import itertools
import logging
import math
import random
import types
from fractions import Fraction

from walgebra import errors
from walgebra import exact
from walgebra import parser
from walgebra import pbw
from walgebra import report

logger = logging.getLogger(__name__)

HBAR = "hbar"

WeylPresentation = collections.namedtuple("WeylPresentation", ["gram", "report"])


class StarContext(object):
    """Variables, their weights and a constant bivector."""

    def __init__(self, variables, bivector, weights=None, k=2, check=True, symplectic=False):
        """Instantiates a StarContext.

        Args:
          variables: Names of the variables, in order.
          bivector: n x n matrix (SparseMat or rows) with P[a][b] = P(d_a, d_b).
          weights: Integer grading weight of each variable; defaults to all 1.
          k: Degree convention: P has weight -k.
          check: Require P to be antisymmetric. Only negative controls turn this off.
          symplectic: Also require P to be nondegenerate.
        Raises:
          UsageError: If the shapes or names do not fit.
          DomainError: If P is not antisymmetric, or degenerate when symplectic.
        """
        variables = tuple(variables)
        if len(set(variables)) != len(variables) or HBAR in variables:
            raise errors.UsageError("Variable names must be distinct and differ from {!r}".format(HBAR))
        if not isinstance(bivector, exact.SparseMat):
            bivector = exact.SparseMat.FromDense(bivector, cols=len(variables))
        if bivector.rows != len(variables) or bivector.cols != len(variables):
            raise errors.UsageError(
                "Bivector is {}x{} for {} variables".format(bivector.rows, bivector.cols, len(variables))
            )
        weights = tuple(int(w) for w in (weights if weights is not None else [1] * len(variables)))
        if len(weights) != len(variables):
            raise errors.UsageError("{} weights for {} variables".format(len(weights), len(variables)))
        if check:
            for (a, b), value in bivector.Items():
                if bivector.Get(b, a) != -value:
                    raise errors.DomainError(
                        "Bivector is not antisymmetric at ({}, {})".format(variables[a], variables[b])
                    )
        if symplectic and exact.Determinant(bivector) == 0:
            raise errors.DomainError("Bivector is degenerate")
        self.variables = variables
        self.weights = weights
        self.bivector = bivector
        self.k = int(k)
        self.dim = len(variables)
        self.origin = (0,) * len(variables)
        self._index = {name: i for i, name in enumerate(variables)}
        self._operators = [types.MappingProxyType({(self.origin, self.origin): Fraction(1)})]

    def Index(self, name):
        if name not in self._index:
            raise errors.UsageError("Unknown variable {!r}".format(name))
        return self._index[name]

    def Zero(self):
        return StarPoly(self)

    def One(self):
        return self.Scalar(1)

    def Scalar(self, value):
        return StarPoly(self, {(self.origin, 0): value})

    def Variable(self, name):
        index = name if isinstance(name, int) else self.Index(name)
        exponents = [0] * self.dim
        exponents[index] = 1
        return StarPoly(self, {(tuple(exponents), 0): 1})

    def Hbar(self):
        return StarPoly(self, {(self.origin, 1): 1})

    def Monomial(self, exponents, hbar=0):
        return StarPoly(self, {(tuple(exponents), hbar): 1})

    def Weight(self, exponents):
        return sum(w * e for w, e in zip(self.weights, exponents))

    def Contraction(self, order):
        """P^order as {(left derivative, right derivative): Rat}, memoized."""
        while len(self._operators) <= order:
            previous = self._operators[-1]
            following = collections.defaultdict(Fraction)
            for (left, right), value in previous.items():
                for (a, b), entry in self.bivector.Items():
                    shifted_left = left[:a] + (left[a] + 1,) + left[a + 1:]
                    shifted_right = right[:b] + (right[b] + 1,) + right[b + 1:]
                    following[(shifted_left, shifted_right)] += value * entry
            self._operators.append(types.MappingProxyType({key: v for key, v in following.items() if v}))
        return self._operators[order]

    def __repr__(self):
        return "StarContext({})".format(",".join(self.variables))


def SymplecticContext(variables, k=2, weights=None):
    """The standard symplectic context: P(d_{q_i}, d_{p_i}) = 1 for the halves (q, p)."""
    variables = tuple(variables)
    if len(variables) % 2:
        raise errors.UsageError("A symplectic context needs an even number of variables")
    half = len(variables) // 2
    entries = {}
    for i in range(half):
        entries[(i, half + i)] = 1
        entries[(half + i, i)] = -1
    bivector = exact.SparseMat(len(variables), len(variables), entries)
    return StarContext(variables, bivector, weights=weights, k=k, symplectic=True)


class StarPoly(object):
    """An element of K[V][hbar], immutable."""

    __slots__ = ("context", "_terms")

    def __init__(self, context, terms=None):
        cleaned = {}
        for (exponents, hbar), value in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != context.dim or min(exponents + (hbar,)) < 0:
                raise errors.UsageError("Bad exponents {} with hbar^{}".format(exponents, hbar))
            value = exact.ToRat(value)
            if value:
                cleaned[(exponents, int(hbar))] = cleaned.get((exponents, int(hbar)), 0) + value
        self.context = context
        self._terms = types.MappingProxyType({key: v for key, v in cleaned.items() if v})

    @classmethod
    def _FromClean(cls, context, terms):
        poly = cls.__new__(cls)
        poly.context = context
        poly._terms = types.MappingProxyType(terms)
        return poly

    @property
    def terms(self):
        return self._terms

    def IsZero(self):
        return not self._terms

    def Coefficient(self, exponents, hbar=0):
        return self._terms.get((tuple(exponents), hbar), Fraction(0))

    def Degree(self):
        """Total degree in the variables; -1 for zero."""
        return max((sum(exponents) for exponents, _ in self._terms), default=-1)

    def HbarDegree(self):
        return max((hbar for _, hbar in self._terms), default=-1)

    def HbarComponent(self, power):
        """The coefficient of hbar^power, as an hbar-free StarPoly."""
        return StarPoly._FromClean(
            self.context, {(exponents, 0): v for (exponents, hbar), v in self._terms.items() if hbar == power}
        )

    def Specialize(self, value=1):
        """Substitutes hbar = value."""
        value = exact.ToRat(value)
        result = collections.defaultdict(Fraction)
        for (exponents, hbar), v in self._terms.items():
            result[(exponents, 0)] += v * value ** hbar
        return StarPoly._FromClean(self.context, {key: v for key, v in result.items() if v})

    def Derivative(self, index):
        result = {}
        for (exponents, hbar), value in self._terms.items():
            if exponents[index]:
                lowered = exponents[:index] + (exponents[index] - 1,) + exponents[index + 1:]
                result[(lowered, hbar)] = value * exponents[index]
        return StarPoly._FromClean(self.context, result)

    def SortedTerms(self):
        """Terms by increasing hbar power, then decreasing degree and exponents."""
        return sorted(self._terms.items(), key=lambda item: (item[0][1], -sum(item[0][0]), tuple(-e for e in item[0][0])))

    def _Check(self, other):
        if not isinstance(other, StarPoly):
            other = self.context.Scalar(other)
        if other.context is not self.context:
            raise errors.UsageError("StarPoly values belong to different star contexts")
        return other

    def __add__(self, other):
        other = self._Check(other)
        result = dict(self._terms)
        for key, value in other._terms.items():
            total = result.get(key, 0) + value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return StarPoly._FromClean(self.context, result)

    __radd__ = __add__

    def __neg__(self):
        return StarPoly._FromClean(self.context, {key: -v for key, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._Check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._Check(other)
        result = collections.defaultdict(Fraction)
        for (left, h1), a in self._terms.items():
            for (right, h2), b in other._terms.items():
                result[(tuple(x + y for x, y in zip(left, right)), h1 + h2)] += a * b
        return StarPoly._FromClean(self.context, {key: v for key, v in result.items() if v})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, StarPoly):
            return self.context is other.context and dict(self._terms) == dict(other._terms)
        if isinstance(other, (int, Fraction)):
            return self == self.context.Scalar(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def Format(self):
        labels = self.context.variables + (HBAR,)
        letters = []
        for (exponents, hbar), value in self.SortedTerms():
            word = (self.context.dim,) * hbar
            for index, power in enumerate(exponents):
                word += (index,) * power
            letters.append((word, value))
        return pbw.FormatTerms(letters, labels)

    def ToJson(self):
        return [[str(value), list(exponents), hbar] for (exponents, hbar), value in self.SortedTerms()]

    def __repr__(self):
        return "StarPoly({})".format(self.Format())

    __str__ = Format


def ParseStarPoly(context, text, source="<input>"):
    """Parses text such as '3/2 * x^2 p + hbar * x'.

    Raises:
      ParseError: On malformed text or an unknown variable.
    """
    result = context.Zero()
    for coefficient, factors in parser.ParsePolynomial(text, source=source):
        exponents = [0] * context.dim
        hbar = 0
        for name, power, column in factors:
            if name == HBAR:
                hbar += power
            elif name in context._index:
                exponents[context._index[name]] += power
            else:
                raise errors.ParseError("Unknown variable {!r}".format(name), column=column, source=source)
        result = result + StarPoly(context, {(tuple(exponents), hbar): coefficient})
    return result


def _Differentiate(exponents, orders):
    """d^orders x^exponents as (coefficient, exponents), or None when it vanishes."""
    coefficient = 1
    lowered = []
    for e, a in zip(exponents, orders):
        if a > e:
            return None
        coefficient *= math.factorial(e) // math.factorial(e - a)
        lowered.append(e - a)
    return coefficient, tuple(lowered)


def Contract(f, g, order):
    """P^order(f, g), without the hbar factor."""
    context = f.context
    f._Check(g)
    result = collections.defaultdict(Fraction)
    for (left, right), weight in context.Contraction(order).items():
        for (fe, fh), a in f.terms.items():
            df = _Differentiate(fe, left)
            if df is None:
                continue
            for (ge, gh), b in g.terms.items():
                dg = _Differentiate(ge, right)
                if dg is None:
                    continue
                key = (tuple(x + y for x, y in zip(df[1], dg[1])), fh + gh)
                result[key] += weight * a * b * df[0] * dg[0]
    return StarPoly._FromClean(context, {key: v for key, v in result.items() if v})


def Moyal(f, g, ctx=None):
    """The Moyal-Weyl product f * g.

    Args:
      f: A StarPoly.
      g: A StarPoly of the same context.
      ctx: Optional StarContext; must be the context of f and g.
    Returns:
      The StarPoly sum_j (hbar/2)^j / j! P^j(f, g).
    """
    if ctx is not None and (f.context is not ctx or g.context is not ctx):
        raise errors.UsageError("StarPoly values do not belong to the given context")
    context = f.context
    f._Check(g)
    result = context.Zero()
    if f.IsZero() or g.IsZero():
        return result
    for order in range(min(f.Degree(), g.Degree()) + 1):
        term = Contract(f, g, order)
        if term.IsZero():
            continue
        scale = Fraction(1, 2 ** order * math.factorial(order))
        shifted = {(exponents, hbar + order): v * scale for (exponents, hbar), v in term.terms.items()}
        result = result + StarPoly._FromClean(context, shifted)
    return result


def Commutator(f, g, product=Moyal):
    return product(f, g) - product(g, f)


def Poisson(f, g):
    """{f, g} = sum_ab P_ab d_a f d_b g."""
    return Contract(f, g, 1)


def Monomials(context, max_degree, min_degree=0):
    """Exponent tuples of total degree in [min_degree, max_degree], by degree then descending."""
    found = []
    for degree in range(min_degree, max_degree + 1):
        for combination in itertools.combinations_with_replacement(range(context.dim), degree):
            exponents = [0] * context.dim
            for index in combination:
                exponents[index] += 1
            found.append(tuple(exponents))
    return sorted(set(found), key=lambda e: (sum(e), tuple(-x for x in e)))


def RandomPoly(context, rng, max_degree, max_terms=3):
    """A random hbar-free StarPoly with small integer coefficients."""
    monomials = Monomials(context, max_degree)
    terms = {}
    for exponents in rng.sample(monomials, min(max_terms, len(monomials))):
        terms[(exponents, 0)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return StarPoly(context, terms)


def _FirstDifference(left, right):
    difference = left - right
    if difference.IsZero():
        return None
    key, value = difference.SortedTerms()[0]
    term = StarPoly._FromClean(left.context, {key: Fraction(1)}).Format()
    return "{}: {} vs {}".format(term, left.terms.get(key, 0), right.terms.get(key, 0))


def CheckAssociativity(ctx, sample_degree, trials, seed=0, product=None):
    """Checks the star product axioms on random polynomials.

    The report has four elements: unit, associativity over all trials,
    the classical limit f*g = fg mod hbar, and the semiclassical condition
    f*g - g*f = hbar{f, g} mod hbar^2 on all pairs of monomials of degree 1 and 2.

    Args:
      ctx: The StarContext.
      sample_degree: Maximal degree of the random polynomials.
      trials: Number of random triples; at least 1.
      seed: Seed of the random generator.
      product: Binary product to check; defaults to Moyal.
    Returns:
      A report.Report; failures name the first offending term.
    """
    if trials < 1:
        raise errors.UsageError("At least one trial is needed")
    product = product or Moyal
    rng = random.Random(seed)
    result = report.Report(name="associativity", tag="Def 1.1")

    samples = [tuple(RandomPoly(ctx, rng, sample_degree) for _ in range(3)) for _ in range(trials)]
    unit_failure = None
    for f, _, _ in samples:
        for left, right in ((product(ctx.One(), f), f), (product(f, ctx.One()), f)):
            unit_failure = unit_failure or _FirstDifference(left, right)
    result.AddCheck("unit", unit_failure is None, detail=unit_failure or "1*f = f*1 = f")

    failure = None
    for index, (f, g, h) in enumerate(samples):
        difference = _FirstDifference(product(product(f, g), h), product(f, product(g, h)))
        if difference is not None:
            failure = "trial {}, term {}".format(index + 1, difference)
            break
    result.AddCheck(
        "associativity", failure is None, detail=failure or "{} trials".format(trials), data={"trials": trials, "seed": seed}
    )

    failure = None
    for f, g, _ in samples:
        classical = product(f, g).HbarComponent(0)
        difference = _FirstDifference(classical, f * g)
        if difference is not None:
            failure = "f*g - fg at hbar^0, term {}".format(difference)
            break
    result.AddCheck("classical limit", failure is None, detail=failure or "f*g = fg mod hbar")

    failure = None
    monomials = Monomials(ctx, max(1, min(2, sample_degree)), min_degree=1)
    for left, right in itertools.product(monomials, repeat=2):
        f, g = ctx.Monomial(left), ctx.Monomial(right)
        order_one = Commutator(f, g, product).HbarComponent(1)
        difference = _FirstDifference(order_one, Poisson(f, g))
        if difference is not None:
            failure = "{}, {}: {}".format(f.Format(), g.Format(), difference)
            break
    result.AddCheck("semiclassical", failure is None, detail=failure or "f*g - g*f = hbar{f,g} mod hbar^2")
    logger.info("Star product check on %d trials: %s", trials, result.GetStatus())
    return result


def CheckHomogeneity(ctx, bound=3):
    """Checks that each term P^j is homogeneous of degree -k*j.

    For all pairs of monomials of degree <= bound, every term of P^j(f, g) must
    have weight wt(f) + wt(g) - k*j.

    Returns:
      A report.Report with one element 'D_j' per order j = 1..bound.
    """
    result = report.Report(name="homogeneity", tag="Rem 1.1")
    monomials = Monomials(ctx, bound)
    for order in range(1, bound + 1):
        failure = None
        for left, right in itertools.product(monomials, repeat=2):
            if sum(left) < order or sum(right) < order:
                continue
            expected = ctx.Weight(left) + ctx.Weight(right) - ctx.k * order
            term = Contract(ctx.Monomial(left), ctx.Monomial(right), order)
            for (exponents, _), _ in term.SortedTerms():
                if ctx.Weight(exponents) != expected:
                    failure = "{} and {} give weight {}, expected {}".format(
                        ctx.Monomial(left).Format(), ctx.Monomial(right).Format(), ctx.Weight(exponents), expected
                    )
                    break
            if failure:
                break
        result.AddCheck(
            "D_{}".format(order), failure is None, detail=failure or "degree {}".format(-ctx.k * order), data={"order": order}
        )
    return result


def WeylIdentify(ctx):
    """Identifies (K[V], Moyal at hbar = 1) with the Weyl algebra of the form P.

    Checks that u*v - v*u is the constant P(u, v) for every pair of variables.

    Returns:
      A WeylPresentation with the Gram matrix of the commutators and a report.
    Raises:
      DomainError: If P is degenerate.
    """
    if exact.Determinant(ctx.bivector) == 0:
        raise errors.DomainError("Bivector is degenerate; no Weyl algebra presentation")
    result = report.Report(name="weyl-presentation", tag="Ex 3.62")
    entries = {}
    for a, b in itertools.product(range(ctx.dim), repeat=2):
        u, v = ctx.Variable(a), ctx.Variable(b)
        commutator = Commutator(u, v).Specialize(1)
        value = commutator.Coefficient((0,) * ctx.dim)
        constant = commutator == value
        entries[(a, b)] = value
        result.AddCheck(
            "[{},{}]".format(ctx.variables[a], ctx.variables[b]),
            constant and value == ctx.bivector.Get(a, b),
            detail=commutator.Format(),
        )
    gram = exact.SparseMat(ctx.dim, ctx.dim, entries)
    return WeylPresentation(gram, result)


class EquivalenceTransport(object):
    """The product f *' g = T(T^-1 f * T^-1 g) for T = exp(hbar D).

    D = sum_ab D_ab d_a d_b is a constant second-order operator given by a
    symmetric matrix.
    """

    def __init__(self, ctx, operator):
        if not isinstance(operator, exact.SparseMat):
            operator = exact.SparseMat.FromDense(operator, cols=ctx.dim)
        if operator != operator.Transpose() or operator.rows != ctx.dim:
            raise errors.UsageError("The transport operator must be a symmetric {}x{} matrix".format(ctx.dim, ctx.dim))
        self.context = ctx
        self.operator = operator

    def ApplyD(self, poly):
        result = self.context.Zero()
        for (a, b), value in self.operator.Items():
            result = result + poly.Derivative(a).Derivative(b) * value
        return result

    def Apply(self, poly, sign=1):
        """exp(sign * hbar * D) poly; the series stops since D lowers the degree by 2."""
        result = poly
        term = poly
        order = 0
        while not term.IsZero():
            order += 1
            term = self.ApplyD(term) * self.context.Hbar() * Fraction(sign, order)
            result = result + term
        return result

    def Multiply(self, f, g):
        return self.Apply(Moyal(self.Apply(f, -1), self.Apply(g, -1)))


class QuantumComomentMap(object):
    """xi -> H_xi for a Lie algebra acting linearly and symplectically on the variables.

    xi acts on the coordinate functions by xi.x_c = sum_i A_xi[i][c] x_i with
    A_xi = -M_xi^T, M_xi the matrix of xi on V. The quadratic Hamiltonian is
    H_xi = 1/2 x^T S x with S = A_xi P^-1; it satisfies [H_xi, f] = hbar xi.f.
    """

    def __init__(self, context, algebra, actions, hamiltonians):
        self.context = context
        self.algebra = algebra
        self.actions = tuple(actions)
        self.hamiltonians = tuple(hamiltonians)

    def Hamiltonian(self, xi):
        result = self.context.Zero()
        for value, hamiltonian in zip(xi, self.hamiltonians):
            if value:
                result = result + hamiltonian * value
        return result

    def Act(self, xi, poly):
        """The derivation xi.poly."""
        action = collections.defaultdict(Fraction)
        for value, matrix in zip(xi, self.actions):
            if value:
                for key, entry in matrix.Items():
                    action[key] += value * entry
        result = self.context.Zero()
        for c in range(self.context.dim):
            image = {((0,) * i + (1,) + (0,) * (self.context.dim - i - 1), 0): action[(i, c)] for i in range(self.context.dim)}
            result = result + poly.Derivative(c) * StarPoly(self.context, image)
        return result

    def Verify(self, bound=3):
        """Checks [H_xi, f] = xi.f at hbar = 1 and [H_xi, H_eta] = H_[xi,eta].

        Returns:
          A report.Report with one element per basis element and one per basis pair.
        """
        ctx = self.context
        result = report.Report(name="quantum-comoment", tag="Sec 3.6")
        monomials = Monomials(ctx, bound, min_degree=1)
        for i, label in enumerate(self.algebra.labels):
            xi = self.algebra.Basis(i)
            failure = None
            for exponents in monomials:
                f = ctx.Monomial(exponents)
                difference = _FirstDifference(Commutator(self.hamiltonians[i], f).Specialize(1), self.Act(xi, f))
                if difference is not None:
                    failure = "{}: {}".format(f.Format(), difference)
                    break
            result.AddCheck(
                "[H_{}, f]".format(label),
                failure is None,
                detail=failure or self.hamiltonians[i].Format(),
                data={"bound": bound, "monomials": len(monomials)},
            )
        for i, j in itertools.combinations(range(self.algebra.dim), 2):
            bracket = self.algebra.Bracket(self.algebra.Basis(i), self.algebra.Basis(j))
            lhs = Commutator(self.hamiltonians[i], self.hamiltonians[j]).Specialize(1)
            difference = _FirstDifference(lhs, self.Hamiltonian(bracket))
            result.AddCheck(
                "[H_{}, H_{}]".format(self.algebra.labels[i], self.algebra.labels[j]),
                difference is None,
                detail=difference or "H_[{}]".format(self.algebra.Format(bracket)),
            )
        return result


def QuantumComoment(ctx, algebra, matrices=None):
    """Builds the quantum comoment map of a linear symplectic action.

    Args:
      ctx: A StarContext with nondegenerate P.
      algebra: The acting LieAlgebraData.
      matrices: Matrices M_i of the basis elements on V; defaults to the
        defining representation of `algebra`.
    Returns:
      A QuantumComomentMap.
    Raises:
      DomainError: If P is degenerate or the action does not preserve it.
    """
    if matrices is None:
        matrices = [algebra.MatrixOf(algebra.Basis(i)) for i in range(algebra.dim)]
    if len(matrices) != algebra.dim:
        raise errors.UsageError("{} matrices for a {}-dimensional algebra".format(len(matrices), algebra.dim))
    size = ctx.dim
    columns = []
    for c in range(size):
        unit = [Fraction(0)] * size
        unit[c] = Fraction(1)
        column = exact.Solve(ctx.bivector, unit)
        if column is None:
            raise errors.DomainError("Bivector is degenerate; no comoment map")
        columns.append(column)
    inverse = exact.SparseMat(size, size, {(r, c): columns[c][r] for c in range(size) for r in range(size)})
    actions = []
    hamiltonians = []
    for label, matrix in zip(algebra.labels, matrices):
        if not isinstance(matrix, exact.SparseMat):
            matrix = exact.SparseMat.FromDense(matrix, cols=size)
        if matrix.rows != size or matrix.cols != size:
            raise errors.UsageError("Matrix of {} is {}x{} on {} variables".format(label, matrix.rows, matrix.cols, size))
        action = exact.SparseMat(size, size, {(j, i): -v for (i, j), v in matrix.Items()})
        symmetric = exact.MatMul(action, inverse)
        if symmetric != symmetric.Transpose():
            raise errors.DomainError("{} does not preserve the symplectic form".format(label))
        terms = collections.defaultdict(Fraction)
        for (a, b), value in symmetric.Items():
            exponents = [0] * size
            exponents[a] += 1
            exponents[b] += 1
            terms[(tuple(exponents), 0)] += value / 2
        actions.append(action)
        hamiltonians.append(StarPoly(ctx, terms))
    logger.debug("Quantum comoment map for %s on %d variables", algebra.name, size)
    return QuantumComomentMap(ctx, algebra, actions, hamiltonians)
