"""Affine geometry in coordinates: barycenters, ratios, and classical theorems.

Points are exact coordinate tuples; differences of points are vectors.
The classical predicates (collinearity product, concurrency product,
similarity) are executable forms of their theorems: each validates its
hypotheses and raises :class:`~exalg.errors.PreconditionViolated` naming
the failed clause rather than returning garbage on degenerate input.

Points at infinity are not representable here; configurations that need
them belong to the projective layer.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DegenerateLine,
    DimMismatch,
    FieldMismatch,
    MalformedExpression,
    NotProportional,
    PreconditionViolated,
    ZeroDenominatorVector,
    ZeroWeight,
)
from .fields import Field, FieldElement
from .matrices import Matrix
from .multivector import Vector
from .exterior import wedge_vectors


class AffinePoint:
    """A point with exact affine (not homogeneous) coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords: Iterable):
        coords = tuple(field(c) for c in coords)
        if not coords:
            raise DimMismatch("points need at least one coordinate")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("AffinePoint is immutable")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __sub__(self, other: "AffinePoint") -> Vector:
        """Difference of points is a direction vector."""
        self._check(other)
        return Vector(self.field, (a - b for a, b in zip(self.coords, other.coords)))

    def __add__(self, v: Vector) -> "AffinePoint":
        if v.dim != self.dim:
            raise DimMismatch("translating by a vector of different dimension")
        return AffinePoint(self.field, (a + b for a, b in zip(self.coords, v.coords)))

    def _check(self, other: "AffinePoint") -> None:
        if not isinstance(other, AffinePoint):
            raise TypeError("expected an AffinePoint")
        if self.field != other.field:
            raise FieldMismatch("points over different fields")
        if self.dim != other.dim:
            raise DimMismatch("points of different dimension")

    def __eq__(self, other):
        return (
            isinstance(other, AffinePoint)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __getitem__(self, i: int) -> FieldElement:
        return self.coords[i]

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"AffinePoint({self})"

    @classmethod
    def parse(cls, text: str, field: Field) -> "AffinePoint":
        v = Vector.parse(text, field)
        return cls(field, v.coords)


class AffineMap:
    """An affine self-map v |-> linear(v) + translation."""

    __slots__ = ("linear", "translation")

    def __init__(self, linear: Matrix, translation: Vector):
        if linear.nrows != translation.dim:
            raise DimMismatch("linear part and translation do not match")
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "translation", translation)

    def __setattr__(self, name, value):
        raise AttributeError("AffineMap is immutable")

    def __call__(self, p: AffinePoint) -> AffinePoint:
        image = self.linear.apply(Vector(p.field, p.coords)) + self.translation
        return AffinePoint(p.field, image.coords)


def barycenter(terms: Sequence[tuple[FieldElement, AffinePoint]]) -> AffinePoint:
    """The unique X with (sum of weights) * X = weighted point sum.

    Homogeneous under scaling all weights, and computable piecemeal through
    any grouping with nonzero partial weights.
    """
    if not terms:
        raise ZeroWeight("no terms")
    field = terms[0][1].field
    total = field.zero
    for w, _ in terms:
        total = total + field(w)
    if total.is_zero():
        raise ZeroWeight("total weight is zero")
    dim = terms[0][1].dim
    acc = [field.zero] * dim
    for w, p in terms:
        w = field(w)
        for i in range(dim):
            acc[i] = acc[i] + w * p[i]
    inv = total.inverse()
    return AffinePoint(field, (a * inv for a in acc))


def translate(v: AffinePoint, a, x: AffinePoint, w: AffinePoint) -> AffinePoint:
    """The translate v + a*(x - w)."""
    return v + (x - w).scale(v.field(a))


def affine_independent(ps: Sequence[AffinePoint]) -> bool:
    """True iff the differences from any chosen point are independent."""
    if not ps:
        raise DimMismatch("no points")
    if len(ps) == 1:
        return True
    if len(ps) > ps[0].dim + 1:
        return False
    diffs = [p - ps[0] for p in ps[1:]]
    return not wedge_vectors(diffs).is_zero()


def collinear(ps: Sequence[AffinePoint]) -> bool:
    """True iff all points lie on one line (rank of the lifted tuples <= 2)."""
    if len(ps) < 2:
        raise DimMismatch("need at least two points")
    field = ps[0].field
    lifted = Matrix(field, [[field.one, *p.coords] for p in ps])
    return lifted.rank() <= 2


def vector_ratio(u: Vector, v: Vector) -> FieldElement:
    """The scalar k with u = k*v, defined only for parallel u, v with v != 0."""
    if v.is_zero():
        raise ZeroDenominatorVector("ratio against the zero vector")
    if u.is_zero():
        return u.field.zero
    k = None
    for a, b in zip(u.coords, v.coords):
        if not b.is_zero():
            k = a / b
            break
    if u != v.scale(k):
        raise NotProportional(f"{u} is not a multiple of {v}")
    return k


def _on_line(p: AffinePoint, a: AffinePoint, b: AffinePoint) -> bool:
    return collinear([a, b, p])


def _side_points_check(a, b, c, a1, b1, c1) -> None:
    """Shared hypotheses of the collinearity/concurrency product theorems."""
    if collinear([a, b, c]):
        raise PreconditionViolated("reference points are collinear")
    for name, p in (("first", a1), ("second", b1), ("third", c1)):
        if p in (a, b, c):
            raise PreconditionViolated(f"{name} division point coincides with a reference point")
    if not _on_line(a1, b, c):
        raise PreconditionViolated("first division point is off its side line")
    if not _on_line(b1, c, a):
        raise PreconditionViolated("second division point is off its side line")
    if not _on_line(c1, a, b):
        raise PreconditionViolated("third division point is off its side line")


def _ratio_product(a, b, c, a1, b1, c1) -> FieldElement:
    r1 = vector_ratio(a1 - b, c - a1)
    r2 = vector_ratio(b1 - c, a - b1)
    r3 = vector_ratio(c1 - a, b - c1)
    return r1 * r2 * r3


def menelaus_product(a, b, c, a1, b1, c1) -> FieldElement:
    """The signed division-ratio product along the sides of a triangle.

    Equals -1 exactly when the three division points are collinear.
    """
    _side_points_check(a, b, c, a1, b1, c1)
    return _ratio_product(a, b, c, a1, b1, c1)


def ceva_product(a, b, c, a1, b1, c1) -> FieldElement:
    """Same ratio product; equals +1 exactly when the three point-to-vertex
    lines are concurrent off the sides, or all parallel."""
    _side_points_check(a, b, c, a1, b1, c1)
    return _ratio_product(a, b, c, a1, b1, c1)


class LineIntersection(NamedTuple):
    kind: str  # "point" | "parallel" | "coincident"
    point: AffinePoint | None


def lines_intersect(p1: AffinePoint, q1: AffinePoint, p2: AffinePoint, q2: AffinePoint) -> LineIntersection:
    """Classify the intersection of lines p1q1 and p2q2.

    "parallel" covers every no-intersection case (including skew lines when
    the ambient dimension exceeds two).
    """
    if p1 == q1 or p2 == q2:
        raise DegenerateLine("a line needs two distinct points")
    d1 = q1 - p1
    d2 = q2 - p2
    rhs = p2 - p1
    directions = Matrix.from_columns([d1, d2])
    if directions.rank() == 1:
        if wedge_vectors([d1, rhs]).is_zero():
            return LineIntersection("coincident", None)
        return LineIntersection("parallel", None)
    system = Matrix.from_columns([d1, d2.scale(-1)])
    sol = system.solve(rhs)
    if sol is None:
        return LineIntersection("parallel", None)  # skew
    return LineIntersection("point", p1 + d1.scale(sol[0]))


def dilation_apply(t: AffinePoint, u: AffinePoint, b, v: AffinePoint) -> AffinePoint:
    """The dilation with data (t, u, b) applied to v: t + b*(v - u)."""
    return t + (v - u).scale(t.field(b))


def underlying_linear(alpha: AffineMap, probe: AffinePoint) -> Matrix:
    """Linear part recovered from values alone: h |-> alpha(p + h) - alpha(p).

    The probe point provably drops out; passing two different probes is the
    standard self-check.
    """
    field = probe.field
    base = alpha(probe)
    cols = []
    for j in range(probe.dim):
        h = Vector.basis(field, probe.dim, j + 1)
        cols.append(alpha(probe + h) - base)
    return Matrix.from_columns(cols)


def similarity_check(a: AffinePoint, b: AffinePoint, c: AffinePoint, x: AffinePoint) -> tuple[bool, bool]:
    """Both sides of the side-splitting equivalence at a point of a triangle.

    With w the intersection of lines bx and ac, returns
    (cx parallel to ab,  wc/wa == wx/wb).  The two booleans agree for every
    admissible configuration.
    """
    if collinear([a, b, c]):
        raise PreconditionViolated("reference points are collinear")
    field = a.field
    lifted = Matrix(field, [[field.one, *p.coords] for p in (a, b, c, x)])
    if lifted.rank() > 3:
        raise PreconditionViolated("probe point is outside the reference plane")
    for u, v in ((a, b), (b, c), (c, a)):
        if collinear([u, v, x]):
            raise PreconditionViolated("probe point lies on a side line")
    hit = lines_intersect(b, x, a, c)
    if hit.kind != "point":
        raise PreconditionViolated("the cross line misses the opposite side")
    w = hit.point
    parallel = True
    try:
        vector_ratio(x - c, b - a)
    except NotProportional:
        parallel = False
    ratios_equal = vector_ratio(c - w, a - w) == vector_ratio(x - w, b - w)
    return parallel, ratios_equal


def parse_weighted(text: str, field: Field) -> tuple[FieldElement, AffinePoint]:
    """Parse ``w:[x,y]`` into a weighted point."""
    if ":" not in text:
        raise MalformedExpression(f"expected weight:point, got {text!r}")
    w, p = text.split(":", 1)
    return field.parse(w), AffinePoint.parse(p, field)
