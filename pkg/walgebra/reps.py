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

"""Finite dimensional representations of U(g,e) and the Skryabin functor.

A representation is given by one matrix per generator of a WPresentation and
is checked against the stored structure constants. One-dimensional
representations are found by solving the abelianized relations: a Groebner
basis in lex order with the high-degree generators first leaves the
low-degree generators as free parameters, and the remaining triangular
system is solved over Q.

S(M) = Q (x)_W M is computed in a filtration window as
(F_k Q (x) M) / span(q Theta_i (x) v - q (x) Theta_i v). Its Whittaker
vectors, the joint kernel of xi - chi(xi) for xi in m, must recover M.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import logging
from fractions import Fraction

import sympy

from walgebra import errors
from walgebra import exact
from walgebra import ideals
from walgebra import pbw
from walgebra import report
from walgebra import starprod

logger = logging.getLogger(__name__)

# Consecutive degrees with dim Wh(F_k S(M)) = dim M before a truncation counts as stable.
STABLE_RUN = 3


def CharacterRing(presentation):
    """Lex ring on the generator values, the highest-index generator first."""
    return ideals.PolyRing(tuple(reversed(presentation.names)), order=ideals.LEX)


def AbelianRelations(presentation, ring=None):
    """The structure relations with every generator replaced by a commuting value.

    [Theta_i, Theta_j] vanishes in a one-dimensional module, so the right-hand
    side of each stored commutator must vanish as a polynomial in the values.
    """
    ring = ring or CharacterRing(presentation)
    n = ring.n
    relations = []
    for terms in presentation.structure.values():
        poly = ring.Zero()
        for monomial, value in terms.items():
            exponents = [0] * n
            for index in monomial:
                exponents[n - 1 - index] += 1
            poly = poly + ring.Monomial(exponents, value)
        relations.append(poly)
    return relations


def _Support(poly):
    return {i for monomial in poly.terms for i, e in enumerate(monomial) if e}


def _FreeVariables(ideal):
    """A maximal set of variables no leading monomial lives on, greedily from the last."""
    leading = ideal.LeadingMonomials()
    free = set()
    for k in reversed(range(ideal.ring.n)):
        trial = free | {k}
        if not any(all(e == 0 or i in trial for i, e in enumerate(m)) for m in leading):
            free.add(k)
    return sorted(free)


def _Univariate(poly, k, name):
    symbol = sympy.Symbol(name)
    expr = sum(
        (sympy.Rational(value.numerator, value.denominator) * symbol ** monomial[k] for monomial, value in poly.terms.items()),
        sympy.Integer(0),
    )
    return sympy.Poly(expr, symbol, domain=sympy.QQ)


def _FormatSympy(poly):
    return str(poly.as_expr()).replace("**", "^")


def _Solve(ring, basis, assigned, found):
    """Appends (assignment, minimal polynomial or None) for every branch of the system."""
    polys = list(basis) + [ring.Variable(k) - value for k, value in sorted(assigned.items())]
    ideal = ideals.Buchberger(polys, ring=ring)
    if ideal.IsUnit():
        return
    if len(assigned) == ring.n:
        found.append((dict(assigned), None))
        return
    for k in reversed(range(ring.n)):
        if k in assigned:
            continue
        univariate = [g for g in ideal.basis if _Support(g) == {k}]
        if not univariate:
            continue
        poly = _Univariate(univariate[0], k, ring.variables[k])
        roots = sorted(Fraction(int(root.p), int(root.q)) for root in poly.ground_roots())
        for root in roots:
            branch = dict(assigned)
            branch[k] = root
            _Solve(ring, ideal.basis, branch, found)
        _, factors = sympy.factor_list(poly)
        for factor, _ in factors:
            if factor.degree() > 1:
                found.append((dict(assigned), _FormatSympy(factor)))
        return
    raise errors.ConsistencyError(
        "Character equations are not triangular: {}".format([g.Format() for g in ideal.basis])
    )


class Character(object):
    """A one-dimensional representation Theta_i -> values[Theta_i].

    Attributes:
      presentation: The WPresentation.
      values: OrderedDict generator name -> Rat. Irrational characters only
        carry the values fixed before the minimal polynomial.
      parameters: Names of the generators that were free parameters.
      minimal_polynomial: None, or the irreducible polynomial of the first
        irrational value.
      complete: Whether every pair of generators had its commutator inside the
        truncation window.
    """

    def __init__(self, presentation, values, parameters=(), minimal_polynomial=None, complete=True):
        self.presentation = presentation
        self.values = collections.OrderedDict(values)
        self.parameters = tuple(parameters)
        self.minimal_polynomial = minimal_polynomial
        self.complete = complete

    def IsRational(self):
        return self.minimal_polynomial is None

    def Evaluate(self, terms):
        """The value of {generator monomial: Rat} under the character."""
        if not self.IsRational():
            raise errors.UsageError("Cannot evaluate an irrational character")
        total = Fraction(0)
        for monomial, value in terms.items():
            product = Fraction(value)
            for index in monomial:
                product *= self.values[self.presentation.names[index]]
            total += product
        return total

    def AsModule(self):
        return FinModule(
            self.presentation, 1, [[[self.values[name]]] for name in self.presentation.names]
        )

    def Check(self):
        result = report.Report(name="character", tag="Thm 0.2.3")
        if not self.IsRational():
            result.AddInconclusive("values", detail="irrational: {} = 0".format(self.minimal_polynomial))
            return result
        result.Extend(VerifyModule(self.AsModule()))
        if not self.complete:
            result.AddInconclusive(
                "window", detail="verified through degree {} only".format(self.presentation.N)
            )
        return result

    def ToJson(self):
        return {
            "values": {name: str(value) for name, value in self.values.items()},
            "parameters": list(self.parameters),
            "minimalPolynomial": self.minimal_polynomial,
            "verifiedThrough": self.presentation.N,
            "complete": self.complete,
        }

    def __repr__(self):
        shown = ", ".join("{}={}".format(name, value) for name, value in self.values.items())
        if self.minimal_polynomial:
            shown += ", {} = 0".format(self.minimal_polynomial)
        return "Character({})".format(shown)


def FindCharacters(presentation, parameter_values=None):
    """One-dimensional representations of U(g,e) through the presentation window.

    Args:
      presentation: The WPresentation.
      parameter_values: Optional {generator name: Rat} for free parameters;
        unnamed parameters are set to 0.
    Returns:
      A list of Characters, one per rational solution and one per irrational
      branch. It is empty when the abelianized relations generate the unit ideal.
    Raises:
      UsageError: If parameter_values names a generator that is not free.
    """
    ring = CharacterRing(presentation)
    n = ring.n
    complete = len(presentation.structure) == n * (n - 1) // 2
    ideal = ideals.Buchberger(AbelianRelations(presentation, ring), ring=ring)
    if ideal.IsUnit():
        logger.info("No one-dimensional representations through degree %d", presentation.N)
        return []
    free = _FreeVariables(ideal)
    names = [ring.variables[k] for k in free]
    values = dict(parameter_values or {})
    unknown = sorted(set(values) - set(names))
    if unknown:
        raise errors.UsageError("{} are not free parameters; the free ones are {}".format(unknown, names))
    assigned = {k: exact.ToRat(values.get(ring.variables[k], 0)) for k in free}
    found = []
    _Solve(ring, ideal.basis, assigned, found)
    parameters = [name for name in presentation.names if name in names]
    characters = []
    for assignment, minimal in found:
        ordered = [(name, assignment[ring.Index(name)]) for name in presentation.names if ring.Index(name) in assignment]
        characters.append(Character(presentation, ordered, parameters, minimal, complete))
    logger.info(
        "%d characters through degree %d with parameters %s", len(characters), presentation.N, parameters
    )
    return characters


class FinModule(object):
    """A finite dimensional module given by the matrices of the generators.

    Column a of a matrix is the image of the basis vector e_a.
    """

    def __init__(self, presentation, dimension, matrices):
        """Instantiates a FinModule.

        Args:
          presentation: The WPresentation.
          dimension: The dimension d of the module.
          matrices: One d x d matrix (SparseMat or rows) per generator.
        Raises:
          UsageError: If the number or the shape of the matrices is wrong.
        """
        if len(matrices) != len(presentation.generators):
            raise errors.UsageError(
                "{} matrices for {} generators".format(len(matrices), len(presentation.generators))
            )
        converted = []
        for name, matrix in zip(presentation.names, matrices):
            if not isinstance(matrix, exact.SparseMat):
                matrix = exact.SparseMat.FromDense(matrix, cols=None if len(matrix) else dimension)
            if matrix.rows != dimension or matrix.cols != dimension:
                raise errors.UsageError(
                    "Matrix of {} is {}x{} on a {}-dimensional module".format(name, matrix.rows, matrix.cols, dimension)
                )
            converted.append(matrix)
        self.presentation = presentation
        self.dimension = dimension
        self.matrices = tuple(converted)
        self._actions = {(): exact.SparseMat(dimension, dimension, {(a, a): 1 for a in range(dimension)})}

    @classmethod
    def FromCharacter(cls, character):
        return character.AsModule()

    def Action(self, indices):
        """The matrix of Theta_{i_1} ... Theta_{i_l}."""
        indices = tuple(indices)
        if indices not in self._actions:
            self._actions[indices] = exact.MatMul(self.matrices[indices[0]], self.Action(indices[1:]))
        return self._actions[indices]

    def ToJson(self):
        return {
            "dimension": self.dimension,
            "matrices": {
                name: [[str(value) for value in row] for row in matrix.ToDense()]
                for name, matrix in zip(self.presentation.names, self.matrices)
            },
        }

    def __repr__(self):
        return "FinModule(dim={}, {} generators)".format(self.dimension, len(self.matrices))


def _Combination(terms):
    entries = collections.defaultdict(Fraction)
    for value, matrix in terms:
        for key, entry in matrix.Items():
            entries[key] += value * entry
    return {key: value for key, value in entries.items() if value}


def VerifyModule(module):
    """Checks every stored commutator on the matrices of a FinModule."""
    presentation = module.presentation
    result = report.Report(name="module", tag="Thm 0.2.2")
    if not presentation.structure:
        result.AddPass("relations", detail="no commutators through degree {}".format(presentation.N))
    for (i, j), terms in presentation.structure.items():
        left, right = module.matrices[i], module.matrices[j]
        combination = [(1, exact.MatMul(left, right)), (-1, exact.MatMul(right, left))]
        combination.extend((-value, module.Action(monomial)) for monomial, value in terms.items())
        difference = _Combination(combination)
        name = "[{},{}]".format(presentation.names[i], presentation.names[j])
        if difference:
            (row, col), value = min(difference.items())
            result.AddFail(name, detail="entry ({}, {}) is off by {}".format(row, col, value))
        else:
            result.AddPass(name, detail=presentation.FormatExpression(terms))
    return result


class SkryabinTruncation(object):
    """F_bound S(M) for S(M) = Q (x)_W M.

    Coordinates are pairs (Q monomial, basis index of M), ordered by decreasing
    Kazhdan degree, so the echelon rows of degree <= k span the relations
    inside F_k.

    Attributes:
      bound: The filtration bound.
      dims: dim F_k S(M) for k = 0..bound.
      whittaker_dims: dim of the Whittaker vectors in F_k S(M) for k = 0..bound.
      nilpotent: Whether every xi - chi(xi), xi in m, lowers the filtration degree.
    """

    def __init__(self, module, bound):
        presentation = module.presentation
        quotient = presentation.quotient
        algebra = quotient.algebra
        degree = algebra.MonomialDegree
        size = module.dimension
        self.module = module
        self.bound = bound
        monomials = sorted(quotient.Monomials(bound), key=lambda m: (degree(m), m), reverse=True)
        self.columns = [(m, a) for m in monomials for a in range(size)]
        self._index = {column: i for i, column in enumerate(self.columns)}
        self._degrees = [degree(m) for m, _ in self.columns]

        rows = []
        for position, generator in enumerate(presentation.generators):
            matrix = module.matrices[position]
            for monomial in monomials:
                if degree(monomial) + generator.degree > bound:
                    continue
                source = pbw.NCPoly._FromClean(algebra, {monomial: Fraction(1)})
                product = quotient.Multiply(source, generator.poly)
                for a in range(size):
                    row = collections.defaultdict(Fraction)
                    for term, value in product.terms.items():
                        row[self._index[(term, a)]] += value
                    for b in range(size):
                        entry = matrix.Get(b, a)
                        if entry:
                            row[self._index[(monomial, b)]] -= entry
                    rows.append({col: value for col, value in row.items() if value})
        self._echelon = exact.RowEchelonRows(rows)
        self._pivot_rows = dict(zip(self._echelon.pivots, self._echelon.rows))
        logger.debug(
            "S(M) through degree %d: %d coordinates, %d relations of rank %d",
            bound, len(self.columns), len(rows), len(self._pivot_rows),
        )

        self.dims = []
        for k in range(bound + 1):
            coordinates = sum(1 for d in self._degrees if d <= k)
            relations = sum(1 for pivot in self._pivot_rows if self._degrees[pivot] <= k)
            self.dims.append(coordinates - relations)
        self.nilpotent = True
        self.whittaker_dims = self._WhittakerDims(quotient)

    def _Reduce(self, vector):
        for pivot in [col for col in vector if col in self._pivot_rows]:
            value = vector.get(pivot)
            if not value:
                continue
            for col, entry in self._pivot_rows[pivot].items():
                updated = vector.get(col, 0) - value * entry
                if updated:
                    vector[col] = updated
                else:
                    vector.pop(col, None)
        return vector

    def _WhittakerDims(self, quotient):
        algebra = quotient.algebra
        free = [c for c in range(len(self.columns)) if c not in self._pivot_rows]
        images = {}
        for c in free:
            monomial, a = self.columns[c]
            source = pbw.NCPoly._FromClean(algebra, {monomial: Fraction(1)})
            for letter in range(quotient.dim_m):
                image = quotient.AdImage(letter, source)
                if not image.IsZero() and image.KazhdanDegree() >= self._degrees[c]:
                    self.nilpotent = False
                vector = {self._index[(term, a)]: value for term, value in image.terms.items()}
                images[(c, letter)] = self._Reduce(vector)
        dims = []
        for k in range(self.bound + 1):
            level = [c for c in free if self._degrees[c] <= k]
            equations = collections.defaultdict(dict)
            for position, c in enumerate(level):
                for letter in range(quotient.dim_m):
                    for target, value in images[(c, letter)].items():
                        equations[(letter, target)][position] = value
            dims.append(len(level) - exact.RankOfRows(list(equations.values())))
        return dims

    def GradedDims(self):
        return [self.dims[k] - (self.dims[k - 1] if k else 0) for k in range(self.bound + 1)]

    def IsStable(self):
        target = self.module.dimension
        tail = self.whittaker_dims[-STABLE_RUN:]
        return len(tail) == STABLE_RUN and all(value == target for value in tail)


def SkryabinTruncated(module, degree_bound):
    """Checks that the Whittaker vectors of a truncated S(M) recover M.

    Args:
      module: The FinModule M.
      degree_bound: The filtration bound d of the truncation.
    Returns:
      A report.Report with a nilpotency element, one element per degree and a
      final stability element.
    Raises:
      UsageError: If the degree bound is below 1.
    """
    if degree_bound < 1:
        raise errors.UsageError("The degree bound must be at least 1, got {}".format(degree_bound))
    truncation = SkryabinTruncation(module, degree_bound)
    target = module.dimension
    result = report.Report(name="skryabin", tag="Thm 0.1.1")
    result.AddCheck(
        "locally nilpotent", truncation.nilpotent, detail="m' lowers the filtration degree on F_{}".format(degree_bound)
    )
    for k in range(degree_bound + 1):
        whittaker = truncation.whittaker_dims[k]
        result.Add(
            "F_{}".format(k),
            report.FAIL if whittaker < target else report.PASS,
            detail="dim F_{} S(M) = {}, Whittaker vectors {}".format(k, truncation.dims[k], whittaker),
            data={"degree": k, "dim": truncation.dims[k], "whittaker": whittaker},
        )
    if truncation.IsStable():
        result.AddPass("stable", detail="Whittaker vectors of dimension {} = dim M".format(target))
    else:
        result.AddInconclusive(
            "stable", detail="no stable window through degree {}: {}".format(degree_bound, truncation.whittaker_dims)
        )
    return result


def GkDimCheck(module, window):
    """The growth of F_k S(M) has degree dim m.

    The graded dimensions of S(M) times prod (1 - z^w) over the letters of Q give
    a numerator; it is trusted when its top max(w) coefficients in the window
    vanish, and the degree of growth is the order of the pole at z = 1.
    """
    presentation = module.presentation
    quotient = presentation.quotient
    result = report.Report(name="gk-dimension", tag="Prop 3.41")
    truncation = SkryabinTruncation(module, window)
    graded = truncation.GradedDims()
    weights = [quotient.algebra.degrees[letter] for letter in quotient.letters]
    coefficients = list(graded)
    for w in weights:
        for k in range(window, w - 1, -1):
            coefficients[k] -= coefficients[k - w]
    data = {"graded": graded, "numerator": coefficients, "dimM": quotient.dim_m}
    if not any(graded):
        result.AddCheck("growth", module.dimension == 0, detail="S(M) = 0 through degree {}".format(window), data=data)
        return result
    tail = coefficients[max(0, window - max(weights) + 1):]
    if any(tail) or window < max(weights):
        result.AddInconclusive("growth", detail="window {} is too small: {}".format(window, coefficients), data=data)
        return result
    numerator = sympy.Poly(sum(c * ideals.Z ** k for k, c in enumerate(coefficients)), ideals.Z, domain=sympy.QQ)
    order, _ = ideals.PoleData(numerator, len(weights))
    data["degree"] = order
    result.AddCheck(
        "growth",
        order == quotient.dim_m,
        detail="dim F_k S(M) grows with degree {}, dim m = {}".format(order, quotient.dim_m),
        data=data,
    )
    return result


def _SliceCounts(degrees, low, high):
    """dim K[S]_k for low <= k <= high; zero below 0."""
    counts = {}
    for k in range(low, high + 1):
        counts[k] = len(ideals.MonomialsOfDegree(degrees, k)) if k >= 0 else 0
    return counts


# Matrix coefficients of g = [[a, b], [c, d]] are exponent vectors over (a, b, c, d).
# Left sl2 acts on the rows: raising is a d/dc + b d/dd, lowering is c d/da + d d/db.
_LEFT_RAISING = ((2, 0), (3, 1))
_LEFT_LOWERING = ((0, 2), (1, 3))


def _LeftWeight(exponents):
    return exponents[0] + exponents[1] - exponents[2] - exponents[3]


def _RightWeight(exponents):
    return exponents[0] + exponents[2] - exponents[1] - exponents[3]


def _Derivation(poly, moves):
    """Applies sum target * d/d(source) over the (source, target) pairs in `moves`."""
    result = collections.defaultdict(Fraction)
    for exponents, value in poly.items():
        for source, target in moves:
            power = exponents[source]
            if power:
                shifted = list(exponents)
                shifted[source] -= 1
                shifted[target] += 1
                result[tuple(shifted)] += value * power
    return {monomial: value for monomial, value in result.items() if value}


def IsotypicWeights(weight):
    """Right h-weights of the lambda-isotypic part of K[SL2] for the left action.

    The part is generated, under left lowering, by the left highest weight
    vectors of weight lambda among the matrix coefficients of degree lambda:
    the kernel of left raising on that weight space.

    Returns:
      An OrderedDict right weight -> dimension of the isotypic part in it.
    """
    monomials = ideals.MonomialsOfDegree((1, 1, 1, 1), weight)
    column = {monomial: i for i, monomial in enumerate(monomials)}
    dims = collections.OrderedDict()
    for mu in range(-weight, weight + 1, 2):
        block = [m for m in monomials if _LeftWeight(m) == weight and _RightWeight(m) == mu]
        images = [_Derivation({monomial: Fraction(1)}, _LEFT_RAISING) for monomial in block]
        targets = sorted({m for image in images for m in image})
        rows = [{i: image[t] for i, image in enumerate(images) if t in image} for t in targets]
        generated = []
        for vector in exact.NullSpaceOfRows(rows, len(block)):
            poly = {block[i]: value for i, value in vector.items()}
            while poly:
                generated.append({column[m]: value for m, value in poly.items()})
                poly = _Derivation(poly, _LEFT_LOWERING)
        dims[mu] = exact.RankOfRows(generated)
    return dims


def IsotypicCharacterCheck(setup, weights=(0, 1, 2, 3), bound=12):
    """Graded characters of the isotypic pieces K[X]_lambda for g = sl2.

    K[X]_lambda = K[SL2]_lambda (x) K[S], with K^x acting through the right
    h-weights. The piece of degree k is counted from the isotypic part of the
    matrix coefficients and compared with the coefficient of z^k in
    (lambda + 1) chi_lambda(z) H_S(z), H_S expanded from prod 1/(1 - z^d).

    Raises:
      UsageError: If the setup is not for a three-dimensional algebra.
    """
    if setup.algebra.dim != 3:
        raise errors.UsageError("Isotypic characters are only computed for sl2, not {}".format(setup.algebra.name))
    result = report.Report(name="isotypic", tag="Thm 0.2.3")
    degrees = list(setup.slice_degrees)
    hilbert = sympy.Integer(1)
    for degree in degrees:
        hilbert *= 1 / (1 - ideals.Z ** degree)
    top = bound + max(list(weights) + [0])
    series = sympy.series(hilbert, ideals.Z, 0, top + 1).removeO()
    for weight in weights:
        low = -weight
        parts = IsotypicWeights(weight)
        counts = _SliceCounts(degrees, low - weight, bound + weight)
        direct = [sum(dim * counts.get(k - mu, 0) for mu, dim in parts.items()) for k in range(low, bound + 1)]
        character = sum(ideals.Z ** (weight - 2 * j + weight) for j in range(weight + 1))
        product = sympy.Poly(sympy.expand((weight + 1) * character * series), ideals.Z)
        formal = [int(product.coeff_monomial(ideals.Z ** (k + weight))) for k in range(low, bound + 1)]
        result.AddCheck(
            "lambda = {}".format(weight),
            direct == formal,
            detail="degrees {}..{}: {}".format(low, bound, direct),
            data={"weight": weight, "direct": direct, "formal": formal, "rightWeights": dict(parts)},
        )
    return result


def OscillatorIdeal(algebra, bound=4, max_length=2):
    """The kernel of U(sl2) -> Weyl algebra inside the PBW window.

    Letters map to the quadratic Hamiltonians of the quantum comoment map of the
    defining representation on the plane, and products to Moyal products at
    hbar = 1.

    Args:
      algebra: The PBWAlgebra of an sl2 setup.
      bound: Kazhdan degree bound of the window.
      max_length: PBW length bound of the window.
    Returns:
      A pbw.FilteredSpan of the kernel.
    Raises:
      UsageError: If the algebra is not three-dimensional.
    """
    source = algebra.source
    if source.dim != 3:
        raise errors.UsageError("The oscillator ideal is only built for sl2, not {}".format(source.name))
    plane = starprod.SymplecticContext(["x", "y"])
    comoment = starprod.QuantumComoment(plane, source)
    hamiltonians = [comoment.Hamiltonian(vector) for vector in algebra.vectors]
    monomials = pbw.Monomials(algebra, bound, max_length=max_length)
    images = {(): plane.One()}

    def Image(monomial):
        if monomial not in images:
            images[monomial] = starprod.Moyal(hamiltonians[monomial[0]], Image(monomial[1:]))
        return images[monomial]

    equations = collections.defaultdict(dict)
    for column, monomial in enumerate(monomials):
        for term, value in Image(monomial).Specialize(1).terms.items():
            equations[term][column] = value
    kernel = exact.NullSpaceOfRows(list(equations.values()), len(monomials))
    polys = [
        pbw.NCPoly._FromClean(algebra, {monomials[j]: value for j, value in vector.items()}) for vector in kernel
    ]
    logger.info("Oscillator kernel in degree <= %d, length <= %d: %d elements", bound, max_length, len(polys))
    return pbw.FilteredSpan(algebra, polys)
