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

"""Classical Lie algebras, sl2-triples and the data attached to a nilpotent.

Elements of a Lie algebra are tuples of Rats, the coordinates in the basis of
the LieAlgebraData. The classical algebras are built from their defining
representation: sl_n, so_m with the antidiagonal form and sp_2n with the
standard symplectic form. Their invariant form is the trace form of the
defining representation.

The Cartan elements come first in every basis. Jacobson-Morozov pivots on the
lowest basis index, so for the standard nilpotents the neutral element h comes
out diagonal.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import logging
import math
import types
from fractions import Fraction

from walgebra import errors
from walgebra import exact

logger = logging.getLogger(__name__)

TYPE_TAGS = ("A", "B", "C", "D")

SL2Triple = collections.namedtuple("SL2Triple", ["e", "h", "f"])

Case = collections.namedtuple("Case", ["name", "algebra", "e", "h_prime"])


class LieAlgebraData(object):
    """A finite-dimensional Lie algebra given by exact structure constants."""

    def __init__(self, labels, structure, form, type_tag=None, rank=None, matrices=None):
        """Instantiates a LieAlgebraData.

        Args:
          labels: Names of the basis vectors.
          structure: Map (i, j) -> {k: Rat} giving [b_i, b_j] = sum_k c_k b_k. Pairs
            with i > j may be omitted; they are filled in by antisymmetry.
          form: Symmetric dim x dim SparseMat of the invariant form.
          type_tag: One of TYPE_TAGS for the classical algebras.
          rank: Rank for the classical algebras.
          matrices: Optional defining-representation matrices, one per basis vector.
        """
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        if form.rows != self.dim or form.cols != self.dim:
            raise errors.UsageError("Form is {}x{} for a {}-dimensional algebra".format(form.rows, form.cols, self.dim))
        self.form = form
        self.type_tag = type_tag
        self.rank = rank
        self.matrices = tuple(matrices) if matrices is not None else None
        self._index = {label: i for i, label in enumerate(self.labels)}
        brackets = {}
        for (i, j), value in structure.items():
            cleaned = {k: Fraction(c) for k, c in value.items() if c}
            if not cleaned:
                continue
            brackets[(i, j)] = types.MappingProxyType(cleaned)
            brackets[(j, i)] = types.MappingProxyType({k: -c for k, c in cleaned.items()})
        self._brackets = brackets
        self._empty = types.MappingProxyType({})
        self._matrix_rows = None

    @property
    def name(self):
        if self.type_tag is None:
            return "g"
        return "{}{}".format(self.type_tag, self.rank)

    def Zero(self):
        return tuple([Fraction(0)] * self.dim)

    def Basis(self, index):
        vector = [Fraction(0)] * self.dim
        vector[index] = Fraction(1)
        return tuple(vector)

    def Index(self, label):
        if label not in self._index:
            raise errors.UsageError("Unknown basis label {!r} in {}".format(label, self.name))
        return self._index[label]

    def Element(self, coefficients):
        """Builds an element from a {label: coefficient} mapping."""
        vector = [Fraction(0)] * self.dim
        for label, value in coefficients.items():
            vector[self.Index(label)] += exact.ToRat(value)
        return tuple(vector)

    def BasisBracket(self, i, j):
        """Returns [b_i, b_j] as a read-only {k: Rat} mapping."""
        return self._brackets.get((i, j), self._empty)

    def Bracket(self, x, y):
        result = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in self.BasisBracket(i, j).items():
                    result[k] += a * b * c
        return tuple(result)

    def Pairing(self, x, y):
        """The invariant form <x, y>."""
        total = Fraction(0)
        for (i, j), value in self.form.Items():
            if x[i] and y[j]:
                total += x[i] * value * y[j]
        return total

    def AdMatrix(self, x):
        """Matrix of ad(x): column j holds the coordinates of [x, b_j]."""
        entries = collections.defaultdict(Fraction)
        for i, a in enumerate(x):
            if not a:
                continue
            for j in range(self.dim):
                for k, c in self.BasisBracket(i, j).items():
                    entries[(k, j)] += a * c
        return exact.SparseMat(self.dim, self.dim, entries)

    def MatrixOf(self, x):
        """The defining-representation matrix of x."""
        if self.matrices is None:
            raise errors.UsageError("{} has no defining representation".format(self.name))
        size = self.matrices[0].rows
        entries = collections.defaultdict(Fraction)
        for i, a in enumerate(x):
            if a:
                for key, value in self.matrices[i].Items():
                    entries[key] += a * value
        return exact.SparseMat(size, size, entries)

    def FromMatrix(self, matrix):
        """Coordinates of a defining-representation matrix.

        Raises:
          DomainError: If the matrix does not lie in the algebra.
        """
        if self.matrices is None:
            raise errors.UsageError("{} has no defining representation".format(self.name))
        size = self.matrices[0].rows
        if self._matrix_rows is None:
            rows = [{} for _ in range(size * size)]
            for k, basis_matrix in enumerate(self.matrices):
                for (r, c), value in basis_matrix.Items():
                    rows[r * size + c][k] = value
            self._matrix_rows = rows
        rhs = [matrix.Get(r, c) for r in range(size) for c in range(size)]
        solution = exact.SolveRows(self._matrix_rows, rhs, self.dim)
        if solution is None:
            raise errors.DomainError("Matrix does not lie in {}".format(self.name))
        return tuple(exact.RowToDense(solution, self.dim))

    def Format(self, x):
        """Renders an element as e.g. 'E12 + 2*E23 - 1/2*H1'."""
        parts = []
        for label, value in zip(self.labels, x):
            if not value:
                continue
            magnitude = abs(value)
            term = label if magnitude == 1 else "{}*{}".format(magnitude, label)
            if not parts:
                parts.append(term if value > 0 else "-" + term)
            else:
                parts.append(("+ " if value > 0 else "- ") + term)
        return " ".join(parts) if parts else "0"

    def ToJson(self):
        brackets = []
        for (i, j), value in sorted(self._brackets.items()):
            if i < j:
                brackets.append([self.labels[i], self.labels[j], {self.labels[k]: str(c) for k, c in sorted(value.items())}])
        return {
            "type": self.type_tag,
            "rank": self.rank,
            "dim": self.dim,
            "labels": list(self.labels),
            "brackets": brackets,
            "form": [[i, j, str(value)] for (i, j), value in self.form.Items()],
        }


def _Unit(size, row, col, value=1):
    return {(row, col): Fraction(value)}


def _Sum(*parts):
    entries = collections.defaultdict(Fraction)
    for part in parts:
        for key, value in part.items():
            entries[key] += value
    return entries


def _Commutator(a, b):
    ab = exact.MatMul(a, b)
    ba = exact.MatMul(b, a)
    entries = collections.defaultdict(Fraction)
    for key, value in ab.Items():
        entries[key] += value
    for key, value in ba.Items():
        entries[key] -= value
    return exact.SparseMat(a.rows, a.cols, entries)


def _TraceProduct(a, b):
    total = Fraction(0)
    for (r, c), value in a.Items():
        other = b.Get(c, r)
        if other:
            total += value * other
    return total


def _SlBasis(n):
    basis = []
    for i in range(n - 1):
        basis.append(("H{}".format(i + 1), _Sum(_Unit(n, i, i), _Unit(n, i + 1, i + 1, -1))))
    for i in range(n):
        for j in range(n):
            if i != j:
                basis.append((_ElementaryLabel("E", i, j, n), _Unit(n, i, j)))
    return n, basis


def _SpBasis(r):
    n = 2 * r
    basis = []
    for i in range(r):
        basis.append(("H{}".format(i + 1), _Sum(_Unit(n, i, i), _Unit(n, r + i, r + i, -1))))
    for i in range(r):
        for j in range(r):
            if i != j:
                basis.append((_ElementaryLabel("A", i, j, r), _Sum(_Unit(n, i, j), _Unit(n, r + j, r + i, -1))))
    for i in range(r):
        for j in range(i, r):
            if i == j:
                basis.append((_ElementaryLabel("B", i, i, r), _Unit(n, i, r + i)))
            else:
                basis.append((_ElementaryLabel("B", i, j, r), _Sum(_Unit(n, i, r + j), _Unit(n, j, r + i))))
    for i in range(r):
        for j in range(i, r):
            if i == j:
                basis.append((_ElementaryLabel("C", i, i, r), _Unit(n, r + i, i)))
            else:
                basis.append((_ElementaryLabel("C", i, j, r), _Sum(_Unit(n, r + i, j), _Unit(n, r + j, i))))
    return n, basis


def _SoBasis(m):
    """so_m preserving the antidiagonal form; basis E_ij - E_j'i' with j' = m-1-j."""
    cartan = []
    rest = []
    for i in range(m):
        for j in range(m):
            if i + j >= m - 1:
                continue
            matrix = _Sum(_Unit(m, i, j), _Unit(m, m - 1 - j, m - 1 - i, -1))
            if i == j:
                cartan.append(("H{}".format(i + 1), matrix))
            else:
                rest.append((_ElementaryLabel("F", i, j, m), matrix))
    return m, cartan + rest


def _ElementaryLabel(prefix, i, j, size):
    if size < 10:
        return "{}{}{}".format(prefix, i + 1, j + 1)
    return "{}{}_{}".format(prefix, i + 1, j + 1)


def BuildClassical(type_tag, rank):
    """Builds sl_{r+1}, so_{2r+1}, sp_{2r} or so_{2r} in its matrix basis.

    Args:
      type_tag: One of 'A', 'B', 'C' and 'D'.
      rank: The rank r; at least 1, at least 2 for type D.
    Returns:
      A LieAlgebraData whose form is the trace form of the defining representation.
    Raises:
      UsageError: If the type or rank is unsupported.
    """
    type_tag = str(type_tag).upper()
    if type_tag not in TYPE_TAGS:
        raise errors.UsageError("Unsupported Lie algebra type {!r}; expected one of {}".format(type_tag, ", ".join(TYPE_TAGS)))
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1 or (type_tag == "D" and rank < 2):
        raise errors.UsageError("Unsupported rank {!r} for type {}".format(rank, type_tag))

    if type_tag == "A":
        size, basis = _SlBasis(rank + 1)
    elif type_tag == "B":
        size, basis = _SoBasis(2 * rank + 1)
    elif type_tag == "C":
        size, basis = _SpBasis(rank)
    else:
        size, basis = _SoBasis(2 * rank)

    labels = [label for label, _ in basis]
    matrices = [exact.SparseMat(size, size, entries) for _, entries in basis]
    algebra = LieAlgebraData(labels, {}, exact.SparseMat(len(labels), len(labels)), type_tag, rank, matrices)

    structure = {}
    form = {}
    for i in range(algebra.dim):
        for j in range(i, algebra.dim):
            pairing = _TraceProduct(matrices[i], matrices[j])
            if pairing:
                form[(i, j)] = pairing
                form[(j, i)] = pairing
            if i < j:
                coordinates = algebra.FromMatrix(_Commutator(matrices[i], matrices[j]))
                structure[(i, j)] = exact.DenseToRow(coordinates)
    logger.debug("Built %s%d: dim %d, %d nonzero brackets", type_tag, rank, algebra.dim, len(structure))
    return LieAlgebraData(labels, structure, exact.SparseMat(len(labels), len(labels), form), type_tag, rank, matrices)


def PartitionNilpotent(algebra, partition):
    """The sl_n nilpotent in Jordan form with the given block sizes.

    Blocks are laid out along the diagonal in the given order; each block of
    size k contributes E_{i,i+1} for its first k-1 rows.
    """
    if algebra.type_tag != "A":
        raise errors.UsageError("Partitions name nilpotents of sl_n only; supply an explicit vector for {}".format(algebra.name))
    n = algebra.rank + 1
    parts = [int(part) for part in partition]
    if any(part < 1 for part in parts) or sum(parts) != n:
        raise errors.UsageError("{} is not a partition of {}".format(",".join(str(p) for p in parts), n))
    entries = {}
    start = 0
    for part in parts:
        for offset in range(part - 1):
            entries[(start + offset, start + offset + 1)] = 1
        start += part
    return algebra.FromMatrix(exact.SparseMat(n, n, entries))


def _IsZeroMatrix(matrix):
    return not matrix.Items()


def JacobsonMorozov(algebra, e):
    """Completes a nilpotent e to an sl2-triple (e, h, f).

    h is the solution of [h, e] = 2e lying in [g, e], the orthogonal of the
    centralizer of e, with free coordinates set to zero. f is then the unique
    solution of [e, f] = h and [h, f] = -2f.

    Raises:
      DomainError: If e is zero or not nilpotent.
      ConsistencyError: If no f exists, which cannot happen for a nilpotent e.
    """
    e = tuple(Fraction(value) for value in e)
    if len(e) != algebra.dim:
        raise errors.UsageError("Element of length {} in a {}-dimensional algebra".format(len(e), algebra.dim))
    if not any(e):
        raise errors.DomainError("e = 0 has no sl2-triple")
    ad_e = algebra.AdMatrix(e)
    power = ad_e
    for _ in range(algebra.dim - 1):
        if _IsZeroMatrix(power):
            break
        power = exact.MatMul(power, ad_e)
    if not _IsZeroMatrix(power):
        raise errors.DomainError("{} is not nilpotent".format(algebra.Format(e)))

    ad_rows = ad_e.RowDicts()
    centralizer = exact.NullSpaceOfRows(ad_rows, algebra.dim)
    # [h, e] = -ad(e) h = 2e and <h, c> = 0 for c in z(e).
    rows = [{j: -value for j, value in row.items()} for row in ad_rows]
    rhs = [2 * value for value in e]
    form_rows = algebra.form.RowDicts()
    for vector in centralizer:
        row = collections.defaultdict(Fraction)
        for i, c in vector.items():
            for j, value in form_rows[i].items():
                row[j] += c * value
        rows.append(dict(row))
        rhs.append(Fraction(0))
    solution = exact.SolveRows(rows, rhs, algebra.dim)
    if solution is None:
        raise errors.ConsistencyError("No neutral element found for {}".format(algebra.Format(e)))
    h = tuple(exact.RowToDense(solution, algebra.dim))

    ad_h = algebra.AdMatrix(h)
    stacked = list(ad_rows)
    for k, row in enumerate(ad_h.RowDicts()):
        row = dict(row)
        row[k] = row.get(k, 0) + 2
        stacked.append(row)
    solution = exact.SolveRows(stacked, list(h) + [Fraction(0)] * algebra.dim, algebra.dim)
    if solution is None:
        raise errors.ConsistencyError("No nilnegative element found for {}".format(algebra.Format(e)))
    f = tuple(exact.RowToDense(solution, algebra.dim))
    logger.debug("sl2-triple: h = %s, f = %s", algebra.Format(h), algebra.Format(f))
    return SL2Triple(e, h, f)


def CheckTriple(algebra, triple):
    """Raises DomainError unless [h,e]=2e, [h,f]=-2f and [e,f]=h."""
    e, h, f = triple
    if algebra.Bracket(h, e) != tuple(2 * v for v in e):
        raise errors.DomainError("[h, e] != 2e")
    if algebra.Bracket(h, f) != tuple(-2 * v for v in f):
        raise errors.DomainError("[h, f] != -2f")
    if algebra.Bracket(e, f) != tuple(h):
        raise errors.DomainError("[e, f] != h")


def Eigenspaces(algebra, x):
    """Decomposes the algebra into integral eigenspaces of ad(x).

    Returns:
      A dict weight -> list of eigenvectors, ordered by increasing weight.
    Raises:
      DomainError: If ad(x) is not diagonalizable with integral eigenvalues.
    """
    ad_rows = algebra.AdMatrix(x).RowDicts()
    bound = max([sum(abs(v) for v in row.values()) for row in ad_rows] + [Fraction(0)])
    bound = int(math.ceil(bound))
    spaces = collections.OrderedDict()
    found = 0
    for weight in range(-bound, bound + 1):
        shifted = []
        for k, row in enumerate(ad_rows):
            row = dict(row)
            row[k] = row.get(k, 0) - weight
            shifted.append(row)
        kernel = exact.NullSpaceOfRows(shifted, algebra.dim)
        if kernel:
            spaces[weight] = [tuple(exact.RowToDense(vector, algebra.dim)) for vector in kernel]
            found += len(kernel)
    if found != algebra.dim:
        raise errors.DomainError(
            "ad({}) is not diagonalizable with integral eigenvalues".format(algebra.Format(x))
        )
    return spaces


def _InSpan(vectors, candidate):
    rows = [exact.DenseToRow(v) for v in vectors]
    return exact.RankOfRows(rows + [exact.DenseToRow(candidate)]) == exact.RankOfRows(rows)


def _KernelWithin(algebra, operator, space):
    """Vectors v in span(space) with operator(v) = 0, as full coordinates."""
    images = [operator(vector) for vector in space]
    rows = [{} for _ in range(algebra.dim)]
    for column, image in enumerate(images):
        for k, value in enumerate(image):
            if value:
                rows[k][column] = value
    kernel = exact.NullSpaceOfRows(rows, len(space))
    return [exact.LinearCombination([(c, space[l]) for l, c in vector.items()], algebra.dim) for vector in kernel]


class NilpotentSetup(object):
    """Everything attached to a nilpotent e by an sl2-triple and a grading element h'.

    Attributes:
      algebra: The LieAlgebraData.
      triple: The SL2Triple (e, h, f).
      h_prime: The grading element.
      grading: OrderedDict weight -> tuple of eigenvectors of ad(h').
      chi: The covector <e, .> as a tuple.
      omega: SparseMat of omega_chi(x, y) = <e, [x, y]> on the g(-1) basis.
      y: Basis of the lagrangian subspace of g(-1).
      m, n: Bases of m = g(<=-2) + y and n = g(<=-2) + y^omega.
      m_prime: Pairs (xi, chi(xi)) for xi in the m basis; m' is spanned by xi - chi(xi).
      slice_basis: Pairs (vector, degree) for a basis of z_g(e), degree = weight + 2.
      slice_realization: Pairs (vector, degree) for a graded basis of ker ad(f).
      basis: The adapted basis: eigenvectors by increasing weight, y first in g(-1).
      weights: ad(h') weight of each adapted basis vector.
      labels: Names of the adapted basis vectors.
      dim_m: Number of leading adapted basis vectors spanning m.
    """

    def __init__(self, algebra, triple, h_prime, grading, omega, y, complement, n_minus_one, slice_basis, slice_realization):
        self.algebra = algebra
        self.triple = triple
        self.h_prime = h_prime
        self.grading = grading
        self.chi = tuple(algebra.Pairing(triple.e, algebra.Basis(i)) for i in range(algebra.dim))
        self.omega = omega
        self.y = tuple(y)

        basis = []
        weights = []
        for weight, vectors in grading.items():
            chosen = list(self.y) + list(complement) if weight == -1 else list(vectors)
            basis.extend(chosen)
            weights.extend([weight] * len(chosen))
        self.basis = tuple(basis)
        self.weights = tuple(weights)
        self.labels = tuple(self._Label(vector) for vector in self.basis)

        lower = [vector for weight, vectors in grading.items() if weight <= -2 for vector in vectors]
        self.m = tuple(lower) + self.y
        self.n = tuple(lower) + tuple(n_minus_one)
        self.dim_m = len(self.m)
        self.m_prime = tuple((xi, self.Chi(xi)) for xi in self.m)
        self.slice_basis = tuple(slice_basis)
        self.slice_realization = tuple(slice_realization)

        rows = [{} for _ in range(algebra.dim)]
        for column, vector in enumerate(self.basis):
            for k, value in enumerate(vector):
                if value:
                    rows[k][column] = value
        self._coordinate_rows = rows

    def _Label(self, vector):
        support = [i for i, value in enumerate(vector) if value]
        if len(support) == 1 and vector[support[0]] == 1:
            return self.algebra.labels[support[0]]
        return "({})".format(self.algebra.Format(vector))

    def Chi(self, x):
        return sum((a * b for a, b in zip(self.chi, x)), Fraction(0))

    def Omega(self, x, y):
        return self.Chi(self.algebra.Bracket(x, y))

    def Coordinates(self, x):
        """Coordinates of x in the adapted basis."""
        solution = exact.SolveRows(self._coordinate_rows, list(x), self.algebra.dim)
        if solution is None:
            raise errors.ConsistencyError("Adapted basis does not span the algebra")
        return tuple(exact.RowToDense(solution, self.algebra.dim))

    @property
    def slice_degrees(self):
        return sorted(degree for _, degree in self.slice_basis)

    def ToJson(self):
        algebra = self.algebra
        return {
            "algebra": algebra.name,
            "e": algebra.Format(self.triple.e),
            "h": algebra.Format(self.triple.h),
            "f": algebra.Format(self.triple.f),
            "hPrime": algebra.Format(self.h_prime),
            "grading": {str(weight): [algebra.Format(v) for v in vectors] for weight, vectors in self.grading.items()},
            "chi": [str(value) for value in self.chi],
            "y": [algebra.Format(v) for v in self.y],
            "m": [algebra.Format(v) for v in self.m],
            "n": [algebra.Format(v) for v in self.n],
            "mPrime": [[algebra.Format(xi), str(value)] for xi, value in self.m_prime],
            "sliceBasis": [[algebra.Format(v), degree] for v, degree in self.slice_basis],
            "sliceDegrees": self.slice_degrees,
        }


def _GreedyLagrangian(setup_omega, minus_one, size):
    """Takes the first basis vector, then the first vector omega-orthogonal to the span so far."""
    y = []
    half = len(minus_one) // 2
    while len(y) < half:
        rows = [{l: setup_omega(vector, other) for l, other in enumerate(minus_one) if setup_omega(vector, other)} for vector in y]
        for coefficients in exact.NullSpaceOfRows(rows, len(minus_one)):
            candidate = exact.LinearCombination([(c, minus_one[l]) for l, c in coefficients.items()], size)
            if not _InSpan(y, candidate):
                y.append(candidate)
                break
        else:
            raise errors.ConsistencyError("Cannot extend an isotropic subspace of g(-1)")
    return y


def BuildSetup(algebra, triple, h_prime=None, y=None):
    """Builds the grading, chi, y, m, m' and the slice data for a triple.

    Args:
      algebra: The LieAlgebraData.
      triple: An SL2Triple.
      h_prime: Grading element; defaults to h.
      y: Optional explicit basis of a lagrangian subspace of g(-1).
    Returns:
      A NilpotentSetup.
    Raises:
      DomainError: If the triple is invalid, h' fails [h',e]=2e or [h',h]=0, ad(h')
        has non-integral eigenvalues or negative ones on z_g(e), or y is not lagrangian.
      ConsistencyError: If omega_chi is degenerate on g(-1).
    """
    CheckTriple(algebra, triple)
    e, h, f = triple
    h_prime = tuple(Fraction(v) for v in (h if h_prime is None else h_prime))
    if algebra.Bracket(h_prime, e) != tuple(2 * v for v in e):
        raise errors.DomainError("h' does not satisfy [h', e] = 2e")
    if any(algebra.Bracket(h_prime, h)):
        raise errors.DomainError("h' does not commute with h")

    grading = collections.OrderedDict((weight, tuple(vectors)) for weight, vectors in Eigenspaces(algebra, h_prime).items())
    ad_e = lambda x: algebra.Bracket(e, x)
    ad_f = lambda x: algebra.Bracket(f, x)

    slice_basis = []
    slice_realization = []
    for weight, vectors in grading.items():
        for vector in _KernelWithin(algebra, ad_e, list(vectors)):
            if weight < 0:
                raise errors.DomainError("ad(h') has the negative eigenvalue {} on z_g(e)".format(weight))
            slice_basis.append((vector, weight + 2))
        for vector in _KernelWithin(algebra, ad_f, list(vectors)):
            slice_realization.append((vector, -weight + 2))
    centralizer_dim = len(exact.NullSpaceOfRows(algebra.AdMatrix(e).RowDicts(), algebra.dim))
    if len(slice_basis) != centralizer_dim:
        raise errors.ConsistencyError("z_g(e) is not graded by ad(h')")
    if len(slice_realization) != centralizer_dim:
        raise errors.DomainError("ker ad(f) is not graded by ad(h')")

    def Omega(x, z):
        return algebra.Pairing(e, algebra.Bracket(x, z))

    minus_one = list(grading.get(-1, ()))
    omega = exact.SparseMat(
        len(minus_one), len(minus_one),
        {(a, b): Omega(u, v) for a, u in enumerate(minus_one) for b, v in enumerate(minus_one)},
    )
    if exact.Determinant(omega) == 0:
        raise errors.ConsistencyError("omega_chi is degenerate on g(-1)")

    if y is None:
        y = _GreedyLagrangian(Omega, minus_one, algebra.dim)
    else:
        y = [tuple(Fraction(v) for v in vector) for vector in y]
        if len(y) * 2 != len(minus_one) or exact.RankOfRows([exact.DenseToRow(v) for v in y]) != len(y):
            raise errors.DomainError("y must have dimension {}".format(len(minus_one) // 2))
        for vector in y:
            if not _InSpan(minus_one, vector):
                raise errors.DomainError("{} does not lie in g(-1)".format(algebra.Format(vector)))
        if any(Omega(u, v) for u in y for v in y):
            raise errors.DomainError("y is not isotropic for omega_chi")

    complement = []
    for vector in minus_one:
        if not _InSpan(list(y) + complement, vector):
            complement.append(vector)
    orthogonal_rows = [{l: Omega(u, v) for l, v in enumerate(minus_one) if Omega(u, v)} for u in y]
    n_minus_one = [
        exact.LinearCombination([(c, minus_one[l]) for l, c in coefficients.items()], algebra.dim)
        for coefficients in exact.NullSpaceOfRows(orthogonal_rows, len(minus_one))
    ]

    setup = NilpotentSetup(algebra, triple, h_prime, grading, omega, y, complement, n_minus_one, slice_basis, slice_realization)
    if 2 * setup.dim_m != algebra.dim - centralizer_dim:
        raise errors.ConsistencyError("dim m = {} but dim g - dim z_g(e) = {}".format(setup.dim_m, algebra.dim - centralizer_dim))
    logger.info("Setup for %s: dim m = %d, slice degrees %s", algebra.Format(e), setup.dim_m, setup.slice_degrees)
    return setup


def ShippedCase(name):
    """Returns one of the named test cases as a Case.

    The cases are 'sl2-principal', 'sl3-principal', 'sl3-minimal',
    'sl3-minimal-even' (sl3 minimal with the even grading h' = h + h0/3, h0
    central in the reductive centralizer) and 'sp4-subregular'.
    """
    if name == "sl2-principal":
        algebra = BuildClassical("A", 1)
        return Case(name, algebra, algebra.Element({"E12": 1}), None)
    if name == "sl3-principal":
        algebra = BuildClassical("A", 2)
        return Case(name, algebra, algebra.Element({"E12": 1, "E23": 1}), None)
    if name in ("sl3-minimal", "sl3-minimal-even"):
        algebra = BuildClassical("A", 2)
        e = algebra.Element({"E13": 1})
        h_prime = None
        if name == "sl3-minimal-even":
            # h = diag(1, 0, -1), h0 = diag(1, -2, 1).
            h_prime = algebra.Element({"H1": Fraction(4, 3), "H2": Fraction(2, 3)})
        return Case(name, algebra, e, h_prime)
    if name == "sp4-subregular":
        algebra = BuildClassical("C", 2)
        return Case(name, algebra, algebra.Element({"B11": 1, "B22": 1}), None)
    raise errors.UsageError("Unknown case {!r}".format(name))


SHIPPED_CASES = ("sl2-principal", "sl3-principal", "sl3-minimal", "sl3-minimal-even", "sp4-subregular")


def SetupForCase(name):
    case = ShippedCase(name)
    triple = JacobsonMorozov(case.algebra, case.e)
    return BuildSetup(case.algebra, triple, h_prime=case.h_prime)
