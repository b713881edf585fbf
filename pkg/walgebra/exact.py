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

"""Exact rational arithmetic and sparse linear algebra.

Rationals are fractions.Fraction, which is always reduced with a positive
denominator. Matrices are SparseMat values; the solvers also accept rows given
directly as {column: value} dicts, which is what the algebra modules produce.

Elimination is fraction-free: rows are scaled to primitive integer vectors and
combined as p * row - a * pivot, then divided by their content. Only the final
back substitution works with fractions. Pivots are chosen deterministically:
the leftmost column with a nonzero entry, and among the candidate rows the one
given first.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import functools
import math
import types
from fractions import Fraction

import six

from walgebra import errors

Rat = Fraction

EchelonForm = collections.namedtuple("EchelonForm", ["pivots", "rows"])


def ToRat(value):
    """Converts an int, Fraction or a string such as '-3/2' into a Rat."""
    if isinstance(value, bool):
        raise errors.UsageError("Booleans are not rationals: {!r}".format(value))
    if isinstance(value, (six.integer_types, Fraction)):
        return Fraction(value)
    if isinstance(value, six.string_types):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise errors.ParseError("Not a rational number: {!r}".format(value))
    raise errors.UsageError("Cannot convert {!r} to a rational number".format(value))


class SparseMat(object):
    """An immutable rows x cols matrix of Rats with no stored zeros."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise errors.UsageError("Matrix shape must be nonnegative: {}x{}".format(rows, cols))
        cleaned = {}
        for (row, col), value in (entries or {}).items():
            if not (0 <= row < rows and 0 <= col < cols):
                raise errors.UsageError("Entry ({}, {}) outside a {}x{} matrix".format(row, col, rows, cols))
            value = ToRat(value)
            if value:
                cleaned[(row, col)] = value
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_entries", types.MappingProxyType(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("SparseMat is immutable")

    @classmethod
    def FromDense(cls, dense, cols=None):
        """Builds a matrix from a list of rows; cols is needed only when there are no rows."""
        dense = [list(row) for row in dense]
        if cols is None:
            cols = len(dense[0]) if dense else 0
        for row in dense:
            if len(row) != cols:
                raise errors.UsageError("Ragged rows in dense matrix")
        entries = {(i, j): value for i, row in enumerate(dense) for j, value in enumerate(row)}
        return cls(len(dense), cols, entries)

    @classmethod
    def FromRows(cls, row_dicts, cols):
        """Builds a matrix from sparse rows given as {column: value} dicts."""
        entries = {}
        for i, row in enumerate(row_dicts):
            for j, value in row.items():
                entries[(i, j)] = value
        return cls(len(row_dicts), cols, entries)

    @classmethod
    def Stack(cls, matrices):
        """Stacks matrices with equal column counts on top of each other."""
        matrices = list(matrices)
        if not matrices:
            raise errors.UsageError("Nothing to stack")
        cols = matrices[0].cols
        entries = {}
        offset = 0
        for matrix in matrices:
            if matrix.cols != cols:
                raise errors.UsageError("Cannot stack matrices with {} and {} columns".format(cols, matrix.cols))
            for (i, j), value in matrix.Items():
                entries[(offset + i, j)] = value
            offset += matrix.rows
        return cls(offset, cols, entries)

    def Get(self, row, col):
        return self._entries.get((row, col), Fraction(0))

    def Items(self):
        """Returns the stored entries sorted by (row, col)."""
        return sorted(self._entries.items())

    def RowDicts(self):
        rows = [{} for _ in range(self.rows)]
        for (i, j), value in self._entries.items():
            rows[i][j] = value
        return rows

    def ToDense(self):
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), value in self._entries.items():
            dense[i][j] = value
        return dense

    def Transpose(self):
        return SparseMat(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    def MatVec(self, vector):
        if len(vector) != self.cols:
            raise errors.UsageError("Vector of length {} against {} columns".format(len(vector), self.cols))
        result = [Fraction(0)] * self.rows
        for (i, j), value in self._entries.items():
            result[i] += value * vector[j]
        return result

    def __eq__(self, other):
        if not isinstance(other, SparseMat):
            return NotImplemented
        return (self.rows, self.cols, dict(self._entries)) == (other.rows, other.cols, dict(other._entries))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.Items())))

    def __repr__(self):
        return "SparseMat({}, {}, nnz={})".format(self.rows, self.cols, len(self._entries))


def _Lcm(a, b):
    return a * b // math.gcd(a, b)


def _PrimitiveRow(row):
    """Scales a {col: Rat} row to coprime integers; the empty row stays empty."""
    row = {col: Fraction(value) for col, value in row.items() if value}
    if not row:
        return {}
    denominator = functools.reduce(_Lcm, (value.denominator for value in row.values()), 1)
    ints = {col: int(value * denominator) for col, value in row.items()}
    content = functools.reduce(math.gcd, (abs(value) for value in ints.values()))
    return {col: value // content for col, value in ints.items()}


def _Combine(row, pivot_value, pivot, factor):
    """Returns primitive(pivot_value * row - factor * pivot) for integer rows."""
    result = {col: pivot_value * value for col, value in row.items()}
    for col, value in pivot.items():
        updated = result.get(col, 0) - factor * value
        if updated:
            result[col] = updated
        else:
            result.pop(col, None)
    if not result:
        return result
    content = functools.reduce(math.gcd, (abs(value) for value in result.values()))
    if content > 1:
        result = {col: value // content for col, value in result.items()}
    return result


def _ForwardEliminate(rows):
    """Fraction-free forward elimination; returns [(pivot column, integer row)]."""
    remaining = [row for row in (_PrimitiveRow(r) for r in rows) if row]
    echelon = []
    while remaining:
        col = min(min(row) for row in remaining)
        index = next(i for i, row in enumerate(remaining) if col in row)
        pivot = remaining.pop(index)
        pivot_value = pivot[col]
        survivors = []
        for row in remaining:
            factor = row.get(col)
            if factor is None:
                survivors.append(row)
                continue
            combined = _Combine(row, pivot_value, pivot, factor)
            if combined:
                survivors.append(combined)
        remaining = survivors
        echelon.append((col, pivot))
    return echelon


def _BackSubstitute(echelon):
    """Turns an integer echelon form into reduced row echelon form over Rat."""
    reduced = []
    for col, row in reversed(echelon):
        pivot_value = row[col]
        current = {c: Fraction(v, pivot_value) for c, v in row.items()}
        for later_col, later_row in reduced:
            factor = current.get(later_col)
            if not factor:
                continue
            for c, v in later_row.items():
                updated = current.get(c, 0) - factor * v
                if updated:
                    current[c] = updated
                else:
                    current.pop(c, None)
        reduced.append((col, current))
    reduced.reverse()
    return reduced


def RowEchelonRows(rows):
    """Reduced row echelon form of sparse rows.

    Args:
      rows: Iterable of {column: value} dicts.
    Returns:
      An EchelonForm whose pivots are increasing columns and whose rows have a 1
      in their pivot column and 0 in every other pivot column.
    """
    reduced = _BackSubstitute(_ForwardEliminate(rows))
    return EchelonForm(tuple(col for col, _ in reduced), tuple(row for _, row in reduced))


def RowEchelon(matrix):
    return RowEchelonRows(matrix.RowDicts())


def Rank(matrix):
    return len(_ForwardEliminate(matrix.RowDicts()))


def RankOfRows(rows):
    return len(_ForwardEliminate(rows))


def NullSpaceOfRows(rows, cols):
    """Kernel basis of sparse rows as {column: value} dicts.

    There is one vector per free (non-pivot) column, in increasing order of that
    column. Each vector is 1 at its own free column, 0 at the other free columns.
    """
    echelon = RowEchelonRows(rows)
    pivot_set = set(echelon.pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = {free: Fraction(1)}
        for pivot, row in zip(echelon.pivots, echelon.rows):
            value = row.get(free)
            if value:
                vector[pivot] = -value
        basis.append(vector)
    return basis


def Kernel(matrix):
    """Returns a basis of the null space of `matrix` as dense columns.

    The basis is in reduced column echelon form: the vector belonging to the
    k-th free column is 1 there and 0 at every other free column. The list is
    empty when the matrix is injective.
    """
    return [[vector.get(j, Fraction(0)) for j in range(matrix.cols)] for vector in NullSpaceOfRows(matrix.RowDicts(), matrix.cols)]


def SolveRows(rows, rhs, cols):
    """Solves sparse rows * x = rhs; returns a {column: value} dict or None."""
    if len(rows) != len(rhs):
        raise errors.UsageError("{} rows against a right-hand side of length {}".format(len(rows), len(rhs)))
    augmented = []
    for row, value in zip(rows, rhs):
        extended = dict(row)
        if value:
            extended[cols] = Fraction(value)
        augmented.append(extended)
    echelon = RowEchelonRows(augmented)
    if echelon.pivots and echelon.pivots[-1] == cols:
        return None
    return {pivot: row[cols] for pivot, row in zip(echelon.pivots, echelon.rows) if row.get(cols)}


def Solve(matrix, rhs):
    """Solves matrix * x = rhs exactly.

    Free variables are set to zero, so the answer is deterministic.

    Args:
      matrix: A SparseMat.
      rhs: A sequence of Rats of length matrix.rows.
    Returns:
      The solution as a list of Rats, or None when the system is inconsistent.
    Raises:
      UsageError: If the right-hand side does not match the row count.
    """
    if matrix.rows != len(rhs):
        raise errors.UsageError("Matrix has {} rows but the right-hand side has length {}".format(matrix.rows, len(rhs)))
    solution = SolveRows(matrix.RowDicts(), [ToRat(value) for value in rhs], matrix.cols)
    if solution is None:
        return None
    return [solution.get(j, Fraction(0)) for j in range(matrix.cols)]


def Determinant(matrix):
    """Bareiss determinant of a square matrix."""
    if matrix.rows != matrix.cols:
        raise errors.UsageError("Determinant of a non-square {}x{} matrix".format(matrix.rows, matrix.cols))
    dense = matrix.ToDense()
    size = len(dense)
    if size == 0:
        return Fraction(1)
    sign = 1
    previous = Fraction(1)
    for k in range(size - 1):
        if dense[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if dense[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            dense[k], dense[swap] = dense[swap], dense[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                dense[i][j] = (dense[i][j] * dense[k][k] - dense[i][k] * dense[k][j]) / previous
        previous = dense[k][k]
    return sign * dense[size - 1][size - 1]


def MatMul(left, right):
    """Sparse product of two SparseMats."""
    if left.cols != right.rows:
        raise errors.UsageError("Cannot multiply {}x{} by {}x{}".format(left.rows, left.cols, right.rows, right.cols))
    by_row = collections.defaultdict(list)
    for (k, j), value in right.Items():
        by_row[k].append((j, value))
    entries = collections.defaultdict(Fraction)
    for (i, k), value in left.Items():
        for j, other in by_row.get(k, ()):
            entries[(i, j)] += value * other
    return SparseMat(left.rows, right.cols, entries)


def LinearCombination(terms, size):
    """Sums coefficient * vector over (coefficient, vector) pairs of dense vectors."""
    result = [Fraction(0)] * size
    for coefficient, vector in terms:
        if not coefficient:
            continue
        for i, value in enumerate(vector):
            if value:
                result[i] += coefficient * value
    return tuple(result)


def DenseToRow(vector):
    return {i: Fraction(value) for i, value in enumerate(vector) if value}


def RowToDense(row, size):
    return [row.get(i, Fraction(0)) for i in range(size)]
