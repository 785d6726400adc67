"""Exterior-algebra operations on vectors, maps, and blades.

The independence criterion drives everything here: a wedge of vectors is
nonzero exactly when the vectors are independent, so blades encode
subspaces homogeneously.  Input lists are treated as sequences, so a
repeated vector already counts as dependent and wedges to zero.

Blade factorization recovers vector factors from the extended coordinate
array of a blade: the n axis-parallel files through a nonzero entry are
coordinate tuples of spanning vectors.  Factoring re-expands and compares
against the input, so non-blades are rejected rather than silently
mangled; the returned factors are normalized to re-wedge to the input
exactly.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .errors import (
    DimMismatch,
    GradeMismatch,
    NotABlade,
    NotComplementary,
    NotSquare,
    TooManyColumns,
    ZeroInput,
)
from .fields import FieldElement
from .matrices import Matrix
from .multivector import Multivector, Vector, sort_with_sign


def wedge_vectors(vs: Sequence[Vector]) -> Multivector:
    """The product v1 ^ ... ^ vp; zero exactly when the sequence is dependent."""
    if not vs:
        raise ZeroInput("empty vector list")
    field, dim = vs[0].field, vs[0].dim
    out = Multivector.scalar(field, dim, 1)
    for v in vs:
        if v.dim != dim:
            raise DimMismatch("vectors of different dimension")
        out = out.wedge(Multivector.from_vector(v))
        if out.is_zero():
            return out
    return out


def grade_project(m: Multivector, p: int) -> Multivector:
    """Sum of the grade-p terms of m."""
    if not 0 <= p <= m.dim:
        raise GradeMismatch(f"grade {p} out of range for dimension {m.dim}")
    return m.grade_project(p)


def ext_power_map(matrix: Matrix, p: int, m: Multivector) -> Multivector:
    """Push a homogeneous grade-p element through the p-th exterior power of a map.

    The map sends basis vector j of the source to column j of ``matrix``,
    and v1 ^ ... ^ vp to f(v1) ^ ... ^ f(vp) by linear extension.  The
    target dimension is the row count.
    """
    if m.dim != matrix.ncols:
        raise DimMismatch(f"map has {matrix.ncols} columns but element lives in dimension {m.dim}")
    if not m.is_zero() and m.grade() != p:
        raise GradeMismatch(f"element is not homogeneous of grade {p}")
    field = m.field
    target_dim = matrix.nrows
    out = Multivector.zero(field, target_dim, m.dual)
    cols = [Multivector.from_vector(matrix.column(j), m.dual) for j in range(matrix.ncols)]
    for idx, coeff in m.terms.items():
        term = Multivector.scalar(field, target_dim, coeff, m.dual)
        for i in idx:
            term = term.wedge(cols[i - 1])
            if term.is_zero():
                break
        out = out + term
    return out


def det_of_map(matrix: Matrix) -> FieldElement:
    """Determinant read off the top exterior power: f(e1..ed) = a * e1..ed."""
    if not matrix.is_square():
        raise NotSquare(f"{matrix.nrows}x{matrix.ncols} matrix is not a self-map")
    d = matrix.nrows
    top = Multivector.basis_blade(matrix.field, d, range(1, d + 1))
    image = ext_power_map(matrix, d, top)
    return image.coefficient(tuple(range(1, d + 1)))


def plucker_from_matrix(a: Matrix) -> Multivector:
    """Coordinates of the column span: the minor over rows I is the e_I coefficient.

    Computed from n x n minors directly; agrees with wedging the columns.
    Zero exactly when the columns are dependent.
    """
    d, n = a.nrows, a.ncols
    if n > d:
        raise TooManyColumns(f"{n} columns in dimension {d}")
    from itertools import combinations

    terms = {}
    col_idx = list(range(n))
    for rows in combinations(range(d), n):
        minor = a.submatrix(rows, col_idx).det()
        if not minor.is_zero():
            terms[tuple(r + 1 for r in rows)] = minor
    return Multivector(a.field, d, terms)


class ExtendedCoordView:
    """Signed coordinate array of a homogeneous element, any index order.

    ``view[j1, ..., jn]`` is the fully skew-symmetric extension of the
    stored coordinates: permuted indices pick up the permutation sign and
    repeated indices give zero.
    """

    def __init__(self, m: Multivector):
        if m.is_zero():
            raise ZeroInput("the zero element has no coordinate array")
        self.grade = m.grade()
        self.source = m

    def __getitem__(self, indices) -> FieldElement:
        if isinstance(indices, int):
            indices = (indices,)
        indices = tuple(indices)
        if len(indices) != self.grade:
            raise GradeMismatch(f"expected {self.grade} indices, got {len(indices)}")
        sorted_ = sort_with_sign(indices)
        if sorted_ is None:
            return self.source.field.zero
        sign, idx = sorted_
        c = self.source.coefficient(idx)
        return -c if sign < 0 else c


def factor_blade(m: Multivector) -> list[Vector]:
    """Vector factors of a blade, normalized so their wedge equals m.

    The factors are the files of the extended coordinate array through the
    lexicographically first nonzero entry.  A grade-0 element factors into
    the empty list (the empty product convention).  Raises ZeroInput on
    zero and NotABlade when re-expansion is not proportional to m.
    """
    if m.is_zero():
        raise ZeroInput("cannot factor the zero element")
    if not m.is_homogeneous():
        raise NotABlade("element is not homogeneous")
    n = m.grade()
    if n == 0:
        return []
    field, dim = m.field, m.dim
    pivot = next(iter(m.terms))  # canonical order puts the lexicographic leader first
    view = ExtendedCoordView(m)
    files = []
    for k in range(n):
        coords = [view[pivot[:k] + (i,) + pivot[k + 1 :]] for i in range(1, dim + 1)]
        files.append(Vector(field, coords))
    rewedged = Multivector.scalar(field, dim, 1, m.dual)
    for f in files:
        rewedged = rewedged.wedge(Multivector.from_vector(f, m.dual))
    ratio = rewedged.proportional(m)
    if ratio is None or ratio.is_zero():
        raise NotABlade(f"{m} does not factor into vectors")
    files[0] = files[0].scale(ratio.inverse())
    return files


def is_blade(m: Multivector) -> bool:
    """True iff m is zero, a scalar, or an exterior product of vectors."""
    if m.is_zero():
        return True
    if not m.is_homogeneous():
        return False
    try:
        factor_blade(m)
        return True
    except NotABlade:
        return False


def project_along(w_basis: Sequence[Vector], x_basis: Sequence[Vector], v: Vector) -> Vector:
    """Projection of v onto <W> along <X>, for complementary W and X.

    Writes v = w + x with w in <W>, x in <X> and returns w.  The union of
    the two bases must be a basis of the ambient space (checked by a wedge).
    """
    w, _ = _decompose(w_basis, x_basis, v)
    return w


def reflect_along(w_basis: Sequence[Vector], x_basis: Sequence[Vector], v: Vector) -> Vector:
    """Reflection of v in <W> along <X>: v = w + x maps to w - x."""
    w, x = _decompose(w_basis, x_basis, v)
    return w - x


def _decompose(w_basis: Sequence[Vector], x_basis: Sequence[Vector], v: Vector) -> tuple[Vector, Vector]:
    all_vecs = list(w_basis) + list(x_basis)
    if not all_vecs:
        raise NotComplementary("no basis vectors given")
    dim = v.dim
    if len(all_vecs) != dim or wedge_vectors(all_vecs).is_zero():
        raise NotComplementary("the two families do not form a basis of the ambient space")
    coeffs = Matrix.from_columns(all_vecs).cramer_solve(v)
    field = v.field
    w = Vector.zero(field, dim)
    for i, basis_vec in enumerate(w_basis):
        w = w + basis_vec.scale(coeffs[i])
    x = v - w
    return w, x


def sym_basis_count(n: int, p: int) -> int:
    """Dimension of the degree-p symmetric power of an n-dimensional space."""
    if n < 1:
        raise DimMismatch("need n >= 1")
    return comb(n + p - 1, p)
