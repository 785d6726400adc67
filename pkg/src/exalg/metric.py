"""Scalar product spaces and the Hodge star.

A scalar product is a symmetric invertible Gram matrix over the working
basis.  Its inverse columns form the reciprocal basis, the scalar product
extends to each exterior power by Gram determinants, and the star operator
is the annihilator-blade map followed by the dual-to-reciprocal replacement
(per graded component).  The star is deliberately unscaled: general fields
have no square roots to normalize with.

Two independent definitions of the star are implemented: the composite map
above, and the solution of  s ^ t = g(*s, t) * e{1..d}  as a linear system
per grade.  They agree identically; both are exposed so the test suite can
hold one against the other.

GramForm caches its inverse and determinant eagerly at validation time,
since nearly every identity here consumes both.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .duality import annihilator_blade, annihilator_blade_inv
from .errors import (
    AlreadyDual,
    BadSign,
    Degenerate,
    DimMismatch,
    GradeMismatch,
    NotDual,
    NotSymmetric,
    StarNotBlade,
    WrongDimension,
)
from .exterior import ext_power_map, is_blade
from .fields import Field, FieldElement
from .matrices import Matrix
from .multivector import Multivector, Vector
from .projective import ProjFlat


class GramForm:
    """A validated scalar product: symmetric, invertible Gram matrix."""

    __slots__ = ("field", "dim", "matrix", "inverse", "det", "_ext_cache")

    def __init__(self, matrix: Matrix):
        if not matrix.is_square():
            raise NotSymmetric("Gram matrices are square")
        if matrix != matrix.transpose():
            raise NotSymmetric("Gram matrices are symmetric")
        det = matrix.det()
        if det.is_zero():
            raise Degenerate("Gram matrix is singular")
        object.__setattr__(self, "field", matrix.field)
        object.__setattr__(self, "dim", matrix.nrows)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "inverse", matrix.inverse())
        object.__setattr__(self, "det", det)
        object.__setattr__(self, "_ext_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("GramForm is immutable")

    def __eq__(self, other):
        return isinstance(other, GramForm) and self.matrix == other.matrix

    def __repr__(self):
        return f"GramForm({self.matrix})"

    def pair_basis(self, i: int, j: int) -> FieldElement:
        """g(x_i, x_j) for 1-based basis indices."""
        return self.matrix[i - 1, j - 1]

    def ext_pair_basis(self, idx_i: tuple[int, ...], idx_j: tuple[int, ...]) -> FieldElement:
        """Gram determinant det[g(x_i, x_j)] over two equal-grade multi-indices."""
        key = (idx_i, idx_j)
        cached = self._ext_cache.get(key)
        if cached is not None:
            return cached
        if not idx_i:
            value = self.field.one
        else:
            value = self.matrix.submatrix([i - 1 for i in idx_i], [j - 1 for j in idx_j]).det()
        self._ext_cache[key] = value
        return value


def gram_validate(matrix: Matrix) -> GramForm:
    """Validate and cache a Gram matrix."""
    return GramForm(matrix)


def standard_form(field: Field, signs: Sequence[int]) -> GramForm:
    """Diagonal scalar product with entries +-1."""
    if not signs:
        raise BadSign("empty signature")
    n = len(signs)
    rows = []
    for i, s in enumerate(signs):
        if s not in (1, -1):
            raise BadSign(f"signature entries must be +1 or -1, got {s}")
        rows.append([field(s if i == j else 0) for j in range(n)])
    return GramForm(Matrix(field, rows))


def sp(g: GramForm, v: Vector, w: Vector) -> FieldElement:
    """The scalar product g(v, w)."""
    if v.dim != g.dim or w.dim != g.dim:
        raise DimMismatch("vector dimension does not match the form")
    return _bilinear(g.matrix, v, w)


def _bilinear(m: Matrix, v: Vector, w: Vector) -> FieldElement:
    acc = m.field.zero
    for i in range(m.nrows):
        if v[i].is_zero():
            continue
        row = m.rows[i]
        for j in range(m.ncols):
            acc = acc + v[i] * row[j] * w[j]
    return acc


class ReciprocalBasis:
    """The basis biorthogonal to the working basis under a scalar product."""

    __slots__ = ("vectors",)

    def __init__(self, vectors: Sequence[Vector]):
        object.__setattr__(self, "vectors", tuple(vectors))

    def __setattr__(self, name, value):
        raise AttributeError("ReciprocalBasis is immutable")

    def __getitem__(self, i: int) -> Vector:
        return self.vectors[i]

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def reciprocal(g: GramForm) -> ReciprocalBasis:
    """Columns of the inverse Gram matrix: g(x_i^recip, x_j) = delta_ij."""
    return ReciprocalBasis(g.inverse.columns())


def related_dual_sp(g: GramForm, phi: Multivector, psi: Multivector) -> FieldElement:
    """The induced scalar product on functionals: coordinates paired by the inverse Gram."""
    for f in (phi, psi):
        if not f.dual:
            raise NotDual("the related product takes dual elements")
        if not f.is_zero() and f.grade() != 1:
            raise GradeMismatch("the related product is defined on grade-1 functionals")
    if phi.dim != g.dim or psi.dim != g.dim:
        raise DimMismatch("functional dimension does not match the form")
    return _bilinear(g.inverse, phi.as_vector(), psi.as_vector())


def sp_ext(g: GramForm, r: Multivector, s: Multivector) -> FieldElement:
    """Scalar product on an exterior power: Gram determinants, extended bilinearly.

    Both operands must be homogeneous of one common grade; grade 0 pairs to
    the plain product of scalars.
    """
    if r.dual or s.dual:
        raise AlreadyDual("the exterior scalar product lives on the primal side")
    if r.dim != g.dim or s.dim != g.dim:
        raise DimMismatch("operands do not match the form")
    if r.is_zero() or s.is_zero():
        return g.field.zero
    p, q = r.grade(), s.grade()
    if p != q:
        raise GradeMismatch(f"grades differ: {p} vs {q}")
    acc = g.field.zero
    for idx_i, ci in r.terms.items():
        for idx_j, cj in s.terms.items():
            acc = acc + ci * cj * g.ext_pair_basis(idx_i, idx_j)
    return acc


def _lambda_g_inv(g: GramForm, dm: Multivector) -> Multivector:
    """Replace each dual basis vector by its reciprocal vector, per grade."""
    out = Multivector.zero(g.field, g.dim)
    for p, part in dm.graded_parts():
        primal_part = Multivector(g.field, g.dim, part.terms, dual=False)
        out = out + ext_power_map(g.inverse, p, primal_part)
    return out


def _lambda_g(g: GramForm, m: Multivector) -> Multivector:
    """Replace each basis vector by its Gram image on the dual side, per grade."""
    out = Multivector.zero(g.field, g.dim, dual=True)
    for p, part in m.graded_parts():
        image = ext_power_map(g.matrix, p, part)
        out = out + Multivector(g.field, g.dim, image.terms, dual=True)
    return out


def hodge(g: GramForm, m: Multivector) -> Multivector:
    """The star operator: annihilator blade, then dual-to-reciprocal replacement."""
    if m.dual:
        raise AlreadyDual("use star_dual for dual elements")
    if m.dim != g.dim:
        raise DimMismatch("element does not match the form")
    return _lambda_g_inv(g, annihilator_blade(m))


def hodge_inv(g: GramForm, m: Multivector) -> Multivector:
    """Inverse star: Gram replacement onto the dual side, then the inverse annihilator map."""
    if m.dual:
        raise AlreadyDual("use star_dual for dual elements")
    if m.dim != g.dim:
        raise DimMismatch("element does not match the form")
    return annihilator_blade_inv(_lambda_g(g, m))


def hodge_alt(g: GramForm, m: Multivector) -> Multivector:
    """The star by its implicit definition: the unique u of grade d-p with

        m ^ t = g(u, t) * e{1..d}   for every t of grade d-p.

    Solved as a linear system against the grade-(d-p) basis; identical to
    :func:`hodge`.
    """
    if m.dual:
        raise AlreadyDual("use star_dual for dual elements")
    if m.dim != g.dim:
        raise DimMismatch("element does not match the form")
    field, d = g.field, g.dim
    out = Multivector.zero(field, d)
    top = tuple(range(1, d + 1))
    for p, part in m.graded_parts():
        basis = list(combinations(range(1, d + 1), d - p))
        rhs = []
        for idx_j in basis:
            t = Multivector.basis_blade(field, d, idx_j)
            rhs.append(part.wedge(t).coefficient(top))
        gram_ext = Matrix(
            field,
            [[g.ext_pair_basis(idx_i, idx_j) for idx_i in basis] for idx_j in basis],
        )
        coeffs = gram_ext.solve(Vector(field, rhs))
        out = out + Multivector(field, d, dict(zip(basis, coeffs.coords)))
    return out


def star_dual(g: GramForm, dm: Multivector) -> Multivector:
    """The star on the dual side: reciprocal replacement, then the annihilator map."""
    if not dm.dual:
        raise NotDual("star_dual takes dual elements")
    if dm.dim != g.dim:
        raise DimMismatch("element does not match the form")
    return annihilator_blade(_lambda_g_inv(g, dm))


def orthogonal_flat(g: GramForm, f: ProjFlat) -> ProjFlat:
    """The flat of the orthogonal subspace: the star of the representing blade."""
    starred = hodge(g, f.blade)
    if not is_blade(starred):
        raise StarNotBlade("star of a blade failed to be a blade")
    return ProjFlat(starred)


def cross_product(g: GramForm, u: Vector, v: Vector) -> Vector:
    """In dimension 3: the star of u ^ v, read as a vector."""
    if g.dim != 3 or u.dim != 3 or v.dim != 3:
        raise WrongDimension("the cross product lives in dimension 3")
    uv = Multivector.from_vector(u).wedge(Multivector.from_vector(v))
    return hodge(g, uv).grade_project(1).as_vector()


def parse_gram(text: str, field: Field, dim: int) -> GramForm:
    """Parse the Gram-form grammar ``diag:+1,-1,...`` or ``matrix:[[...],...]``."""
    text = text.strip()
    if text.startswith("diag:"):
        body = text[len("diag:"):]
        signs = []
        for part in body.split(","):
            part = part.strip()
            if part in ("+1", "1"):
                signs.append(1)
            elif part == "-1":
                signs.append(-1)
            else:
                raise BadSign(f"bad signature entry {part!r}")
        if len(signs) != dim:
            raise DimMismatch(f"signature length {len(signs)} but dimension {dim}")
        return standard_form(field, signs)
    if text.startswith("matrix:"):
        m = Matrix.parse(text[len("matrix:"):], field)
        if m.nrows != dim:
            raise DimMismatch(f"matrix size {m.nrows} but dimension {dim}")
        return GramForm(m)
    from .errors import MalformedExpression

    raise MalformedExpression(f"bad Gram form {text!r}")


def euclidean(field: Field, dim: int) -> GramForm:
    """The all-plus standard form."""
    return standard_form(field, [1] * dim)
