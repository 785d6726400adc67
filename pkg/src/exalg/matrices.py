"""Exact linear algebra over a field.

Determinants route by field: fraction-free Bareiss elimination over the
rationals (keeps intermediate entries integral when the input is integral),
plain Gaussian elimination over GF(p).  Both are exact; the permutation-sum
definition is reserved for test oracles.

The permanent uses Ryser's inclusion-exclusion formula; the enumeration
definition likewise lives in the tests.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DimMismatch,
    FieldMismatch,
    MalformedExpression,
    NotSquare,
    SingularMatrix,
)
from .fields import Field, FieldElement
from .multivector import Vector


class Matrix:
    """An immutable rectangular matrix of field elements."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable]):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise DimMismatch("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimMismatch("ragged rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- construction ---------------------------------------------------------

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[field(1 if i == j else 0) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Vector]) -> "Matrix":
        if not columns:
            raise DimMismatch("no columns")
        field = columns[0].field
        dim = columns[0].dim
        for c in columns:
            if c.field != field:
                raise FieldMismatch("columns over different fields")
            if c.dim != dim:
                raise DimMismatch("columns of different dimension")
        return cls(field, [[col[i] for col in columns] for i in range(dim)])

    @classmethod
    def parse(cls, text: str, field: Field) -> "Matrix":
        """Parse ``[[a,b],[c,d]]`` with field-grammar scalars."""
        text = text.strip().replace(" ", "")
        if not (text.startswith("[[") and text.endswith("]]")):
            raise MalformedExpression(f"bad matrix {text!r}")
        body = text[2:-2]
        rows = body.split("],[")
        return cls(field, [[field.parse(x) for x in row.split(",")] for row in rows])

    # -- inspection -------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, pos: tuple[int, int]) -> FieldElement:
        i, j = pos
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return Vector(self.field, self.rows[i])

    def column(self, j: int) -> Vector:
        return Vector(self.field, [r[j] for r in self.rows])

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [[self.rows[i][j] for j in col_idx] for i in row_idx])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __str__(self):
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.rows) + "]"

    def __repr__(self):
        return f"Matrix({self})"

    # -- algebra ------------------------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        if self.ncols != other.nrows:
            raise DimMismatch(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        zero = self.field.zero
        return Matrix(
            self.field,
            [
                [
                    sum((self.rows[i][k] * other.rows[k][j] for k in range(self.ncols)), zero)
                    for j in range(other.ncols)
                ]
                for i in range(self.nrows)
            ],
        )

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        if v.dim != self.ncols:
            raise DimMismatch(f"vector of dimension {v.dim} against {self.nrows}x{self.ncols}")
        zero = self.field.zero
        return Vector(
            self.field,
            [sum((row[k] * v[k] for k in range(self.ncols)), zero) for row in self.rows],
        )

    def scale(self, a) -> "Matrix":
        a = self.field(a)
        return Matrix(self.field, [[a * x for x in row] for row in self.rows])

    # -- determinants ----------------------------------------------------------------

    def det(self) -> FieldElement:
        """Exact determinant; NotSquare on rectangular input."""
        if not self.is_square():
            raise NotSquare(f"{self.nrows}x{self.ncols} matrix has no determinant")
        if self.field.kind == "rationals":
            return self._det_bareiss()
        return self._det_elimination()

    def _det_bareiss(self) -> FieldElement:
        n = self.nrows
        m = [list(row) for row in self.rows]
        one = self.field.one
        sign = one
        prev = one
        for k in range(n - 1):
            if m[k][k].is_zero():
                pivot = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
                if pivot is None:
                    return self.field.zero
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def _det_elimination(self) -> FieldElement:
        n = self.nrows
        m = [list(row) for row in self.rows]
        det = self.field.one
        for k in range(n):
            pivot = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
            if pivot is None:
                return self.field.zero
            if pivot != k:
                m[k], m[pivot] = m[pivot], m[k]
                det = -det
            det = det * m[k][k]
            inv = m[k][k].inverse()
            for i in range(k + 1, n):
                factor = m[i][k] * inv
                if factor.is_zero():
                    continue
                for j in range(k, n):
                    m[i][j] = m[i][j] - factor * m[k][j]
        return det

    def permanent(self) -> FieldElement:
        """Permanent via Ryser's formula (all permutation signs +1)."""
        if not self.is_square():
            raise NotSquare("permanent needs a square matrix")
        n = self.nrows
        zero = self.field.zero
        total = zero
        for size in range(1, n + 1):
            for cols in combinations(range(n), size):
                prod = self.field.one
                for i in range(n):
                    prod = prod * sum((self.rows[i][j] for j in cols), zero)
                if (n - size) % 2:
                    total = total - prod
                else:
                    total = total + prod
        return total

    # -- elimination-based operations -----------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the pivot column list."""
        m = [list(row) for row in self.rows]
        nrows, ncols = self.nrows, self.ncols
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            if r >= nrows:
                break
            pivot = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(nrows):
                if i != r and not m[i][c].is_zero():
                    factor = m[i][c]
                    m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.field, m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[Vector]:
        """A basis of the null space, one vector per free column."""
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        zero, one = self.field.zero, self.field.one
        for f in free:
            coords = [zero] * self.ncols
            coords[f] = one
            for r, c in enumerate(pivots):
                coords[c] = -red.rows[r][f]
            basis.append(Vector(self.field, coords))
        return basis

    def inverse(self) -> "Matrix":
        """Inverse by Gauss-Jordan elimination; SingularMatrix if none."""
        if not self.is_square():
            raise NotSquare("only square matrices invert")
        n = self.nrows
        aug = Matrix(
            self.field,
            [list(self.rows[i]) + [self.field(1 if i == j else 0) for j in range(n)] for i in range(n)],
        )
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise SingularMatrix("matrix is singular")
        return Matrix(self.field, [row[n:] for row in red.rows])

    def cofactor_inverse(self) -> "Matrix":
        """Inverse as adjugate over determinant."""
        if not self.is_square():
            raise NotSquare("only square matrices invert")
        d = self.det()
        if d.is_zero():
            raise SingularMatrix("matrix is singular")
        n = self.nrows
        if n == 1:
            return Matrix(self.field, [[d.inverse()]])
        inv_d = d.inverse()
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = self.submatrix(
                    [r for r in range(n) if r != j],
                    [c for c in range(n) if c != i],
                )
                cof = minor.det()
                if (i + j) % 2:
                    cof = -cof
                row.append(cof * inv_d)
            rows.append(row)
        return Matrix(self.field, rows)

    def cramer_solve(self, b: Vector) -> Vector:
        """Solve A x = b by Cramer's rule; SingularMatrix when det A = 0."""
        if not self.is_square():
            raise NotSquare("Cramer's rule needs a square system")
        if b.dim != self.nrows:
            raise DimMismatch("right-hand side has wrong dimension")
        d = self.det()
        if d.is_zero():
            raise SingularMatrix("coefficient matrix is singular")
        inv_d = d.inverse()
        coords = []
        for i in range(self.ncols):
            replaced = Matrix(
                self.field,
                [
                    [b[r] if c == i else self.rows[r][c] for c in range(self.ncols)]
                    for r in range(self.nrows)
                ],
            )
            coords.append(replaced.det() * inv_d)
        return Vector(self.field, coords)

    def solve(self, b: Vector) -> Vector | None:
        """One solution of A x = b via elimination, or None if inconsistent.

        Works for rectangular systems; free variables are set to zero.
        """
        if b.dim != self.nrows:
            raise DimMismatch("right-hand side has wrong dimension")
        aug = Matrix(self.field, [list(self.rows[i]) + [b[i]] for i in range(self.nrows)])
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        zero = self.field.zero
        coords = [zero] * self.ncols
        for r, c in enumerate(pivots):
            coords[c] = red.rows[r][self.ncols]
        return Vector(self.field, coords)
