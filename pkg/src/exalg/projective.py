"""Projective geometry on blades: flats, join/meet, frames, transformations.

A flat of projective (d-1)-space is a nonzero blade of the ambient
d-dimensional space, held up to scale; grade-0 scalar blades stand for the
empty flat.  Join and meet run the redundancy-skipping fold: factor each
operand into vectors (dual vectors for meet), wedge factors in order,
skipping any factor that would annihilate the partial product.  Meet works
on annihilator blades and pulls the result back, so both operations handle
overlapping flats without special cases.

Affine data enters through homogeneous coordinates: a point gets a leading
1, a direction a leading 0, and directions are ordinary points here.

The classical configuration checks at the bottom draw random instances from
an explicit rng and rejection-sample until the hypotheses hold (capped), so
a run is reproducible from its seed.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .affine import AffinePoint
from .duality import annihilator_blade, annihilator_blade_inv
from .errors import (
    DimMismatch,
    GeneratorExhausted,
    NotAFrame,
    NotComplementary,
    PointInCenter,
    ZeroInput,
    ZeroVector,
)
from .exterior import factor_blade, is_blade, project_along, wedge_vectors
from .fields import Field
from .matrices import Matrix
from .multivector import Multivector, Vector

RETRY_CAP = 1000


class ProjFlat:
    """A flat represented by a nonzero blade, compared up to scale."""

    __slots__ = ("blade", "grade")

    def __init__(self, blade: Multivector):
        if blade.dual:
            raise ZeroInput("flats are represented by primal blades")
        if blade.is_zero():
            raise ZeroInput("the zero element does not represent a flat")
        grade = blade.grade() if blade.is_homogeneous() else None
        # Grades 0, 1, d-1, d are blades automatically; only the middle
        # grades need the factor-and-verify check.
        if grade is None or (2 <= grade <= blade.dim - 2 and not is_blade(blade)):
            from .errors import NotABlade

            raise NotABlade(f"{blade} is not a blade")
        object.__setattr__(self, "blade", blade)
        object.__setattr__(self, "grade", grade)

    @classmethod
    def _trusted(cls, blade: Multivector) -> "ProjFlat":
        """Wrap a blade known to be one by construction (fold outputs)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "blade", blade)
        object.__setattr__(obj, "grade", blade.grade())
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ProjFlat is immutable")

    @property
    def dim(self) -> int:
        return self.blade.dim

    @property
    def pdim(self) -> int:
        """Projective dimension: grade - 1 (the empty flat has pdim -1)."""
        return self.grade - 1

    def is_empty(self) -> bool:
        return self.grade == 0

    def __eq__(self, other):
        if not isinstance(other, ProjFlat):
            return NotImplemented
        if self.dim != other.dim or self.grade != other.grade:
            return False
        return self.blade.proportional(other.blade) is not None

    def __hash__(self):
        raise TypeError("ProjFlat compares up to scale and is unhashable")

    def __str__(self):
        return str(self.blade)

    def __repr__(self):
        return f"ProjFlat({self.blade})"

    def contains_vector(self, v: Vector) -> bool:
        """Membership of a nonzero vector in the represented subspace."""
        if v.is_zero():
            raise ZeroVector("the zero vector represents nothing")
        return Multivector.from_vector(v).wedge(self.blade).is_zero()

    @classmethod
    def from_vectors(cls, vs: Sequence[Vector]) -> "ProjFlat":
        blade = wedge_vectors(vs)
        if blade.is_zero():
            from .errors import DependentInput

            raise DependentInput("spanning vectors are dependent")
        return cls(blade)


class ProjPoint(ProjFlat):
    """A projective point: a grade-1 flat."""

    def __init__(self, v: Vector | Multivector):
        if isinstance(v, Vector):
            if v.is_zero():
                raise ZeroVector("the zero vector represents no point")
            blade = Multivector.from_vector(v)
        else:
            blade = v
            if blade.is_zero() or blade.grade() != 1:
                raise ZeroVector("a point needs a nonzero grade-1 blade")
        super().__init__(blade)

    @property
    def vector(self) -> Vector:
        """A representative coordinate tuple."""
        return self.blade.as_vector()


def embed_affine(p: AffinePoint) -> ProjPoint:
    """Homogenize an affine point by prepending coordinate 1."""
    return ProjPoint(Vector(p.field, (p.field.one, *p.coords)))


def embed_direction(v: Vector) -> ProjPoint:
    """Embed a direction as a point at infinity (leading coordinate 0)."""
    if v.is_zero():
        raise ZeroVector("the zero vector is not a direction")
    return ProjPoint(Vector(v.field, (v.field.zero, *v.coords)))


def dehomogenize(p: ProjPoint):
    """Invert the affine embedding.

    Returns ("affine", AffinePoint) when the leading coordinate is nonzero,
    else ("infinity", direction Vector).
    """
    v = p.vector
    lead = v[0]
    rest = v.coords[1:]
    if lead.is_zero():
        return "infinity", Vector(v.field, rest)
    inv = lead.inverse()
    return "affine", AffinePoint(v.field, (c * inv for c in rest))


def _fold(seed: Multivector, factors: Sequence) -> Multivector:
    """Wedge factors onto seed, skipping any factor that would give zero."""
    gamma = seed
    for f in factors:
        candidate = gamma.wedge(f)
        if not candidate.is_zero():
            gamma = candidate
    return gamma


def join(flats: Sequence[ProjFlat]) -> ProjFlat:
    """Blade of the subspace sum, built by redundancy-skipping wedge folds.

    Factors every operand and folds the factor vectors in input order; a
    factor already in the span is skipped.  Deterministic given the input
    order.
    """
    if not flats:
        raise ZeroInput("join of no flats")
    dim = flats[0].dim
    field = flats[0].blade.field
    gamma = Multivector.scalar(field, dim, 1)
    for f in flats:
        if f.dim != dim:
            raise DimMismatch("flats of different dimension")
        gamma = _fold(gamma, [Multivector.from_vector(v) for v in factor_blade(f.blade)])
    return ProjFlat._trusted(gamma)


def meet(a: ProjFlat, b: ProjFlat) -> ProjFlat:
    """Blade of the intersection, via the same fold on annihilator blades.

    Returns the scalar (empty) flat when the intersection is trivial.
    """
    if a.dim != b.dim:
        raise DimMismatch("flats of different dimension")
    field, dim = a.blade.field, a.dim
    gamma = Multivector.scalar(field, dim, 1, dual=True)
    for f in (a, b):
        dual_blade = annihilator_blade(f.blade)
        gamma = _fold(gamma, [Multivector.from_vector(v, dual=True) for v in factor_blade(dual_blade)])
    return ProjFlat._trusted(annihilator_blade_inv(gamma))


def incident(a: ProjFlat, b: ProjFlat) -> bool:
    """True iff one flat is contained in the other."""
    return join([a, b]).grade == max(a.grade, b.grade)


def collinear_points(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """True iff representative vectors of the three points are dependent."""
    return wedge_vectors([p.vector, q.vector, r.vector]).is_zero()


def general_position(points: Sequence[ProjPoint]) -> bool:
    """Distinct points whose representatives are as independent as possible."""
    from itertools import combinations

    if not points:
        return True
    d = points[0].dim
    for p, q in combinations(points, 2):
        if p == q:
            return False
    k = min(d, len(points))
    for subset in combinations(points, k):
        if wedge_vectors([p.vector for p in subset]).is_zero():
            return False
    return True


class ProjFrame:
    """d+1 points in general position; the first is the unit point."""

    __slots__ = ("points",)

    def __init__(self, points: Sequence[ProjPoint]):
        points = tuple(points)
        if not points:
            raise NotAFrame("empty frame")
        d = points[0].dim
        if len(points) != d + 1:
            raise NotAFrame(f"a frame in dimension {d} needs {d + 1} points")
        if not general_position(points):
            raise NotAFrame("frame points are not in general position")
        object.__setattr__(self, "points", points)

    def __setattr__(self, name, value):
        raise AttributeError("ProjFrame is immutable")

    @property
    def dim(self) -> int:
        return self.points[0].dim


def standardize_frame(frame: ProjFrame) -> list[Vector]:
    """Base-point representatives x1..xd whose sum represents the unit point.

    Unique up to one overall scalar; canonicalized by scaling the first
    nonzero coordinate of x1 to 1.
    """
    unit = frame.points[0].vector
    base = [p.vector for p in frame.points[1:]]
    coeffs = Matrix.from_columns(base).cramer_solve(unit)
    if any(c.is_zero() for c in coeffs):
        raise NotAFrame("unit point is degenerate against the base points")
    xs = [b.scale(c) for c, b in zip(coeffs, base)]
    lead = next(c for c in xs[0].coords if not c.is_zero())
    inv = lead.inverse()
    return [x.scale(inv) for x in xs]


class ProjTransform:
    """A projective transformation held as a matrix in canonical scale.

    The first nonzero entry in row-major order is normalized to 1, making
    equality of transformations plain matrix equality.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        from .errors import SingularMatrix

        if not matrix.is_square():
            raise SingularMatrix("projective transformations are square")
        if matrix.det().is_zero():
            raise SingularMatrix("projective transformations are invertible")
        lead = next(x for row in matrix.rows for x in row if not x.is_zero())
        object.__setattr__(self, "matrix", matrix.scale(lead.inverse()))

    def __setattr__(self, name, value):
        raise AttributeError("ProjTransform is immutable")

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def __eq__(self, other):
        return isinstance(other, ProjTransform) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"ProjTransform({self.matrix})"


def transform_from_frames(src: ProjFrame, dst: ProjFrame) -> ProjTransform:
    """The unique transformation carrying one frame to another, point by point."""
    if src.dim != dst.dim:
        raise DimMismatch("frames of different dimension")
    xs = standardize_frame(src)
    ys = standardize_frame(dst)
    x_mat = Matrix.from_columns(xs)
    y_mat = Matrix.from_columns(ys)
    return ProjTransform(y_mat @ x_mat.inverse())


def transform_apply(t: ProjTransform, p: ProjPoint) -> ProjPoint:
    """Action on points through any representative."""
    if t.dim != p.dim:
        raise DimMismatch("transformation and point dimensions differ")
    return ProjPoint(t.matrix.apply(p.vector))


def transforms_equal(s: ProjTransform, t: ProjTransform) -> bool:
    """True iff the two transformations agree on every point."""
    if s.dim != t.dim:
        raise DimMismatch("transformations of different dimension")
    return s.matrix == t.matrix


def central_project(center: ProjFlat, target: ProjFlat, p: ProjPoint) -> ProjPoint:
    """Project p from the center flat onto the complementary target flat.

    Realized as the linear projection onto the target subspace along the
    center subspace; equals meet(join(center, p), target) up to scale.
    Points inside the center have no image and raise PointInCenter.
    """
    if join([center, target]).grade != center.dim or not meet(center, target).is_empty():
        raise NotComplementary("center and target must be complementary flats")
    c_basis = factor_blade(center.blade)
    t_basis = factor_blade(target.blade)
    image = project_along(t_basis, c_basis, p.vector)
    if image.is_zero():
        raise PointInCenter("the point lies in the center")
    return ProjPoint(image)


# -- randomized configuration checks ------------------------------------------


def _rand_nonzero(field: Field, rng):
    while True:
        x = _rand_scalar(field, rng)
        if not x.is_zero():
            return x


def _rand_scalar(field: Field, rng):
    if field.kind == "prime":
        return field(rng.randrange(field.modulus))
    from fractions import Fraction

    return field(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


def _rand_point(field: Field, dim: int, rng) -> ProjPoint:
    while True:
        v = Vector(field, [_rand_scalar(field, rng) for _ in range(dim)])
        if not v.is_zero():
            return ProjPoint(v)


def _combine(p: ProjPoint, q: ProjPoint, rng) -> ProjPoint:
    """A random point on the line through two distinct points."""
    field = p.blade.field
    while True:
        s, t = _rand_scalar(field, rng), _rand_scalar(field, rng)
        v = p.vector.scale(s) + q.vector.scale(t)
        if not v.is_zero():
            return ProjPoint(v)


def _retrying(draw: Callable[[], bool | None]) -> bool:
    for _ in range(RETRY_CAP):
        result = draw()
        if result is not None:
            return result
    raise GeneratorExhausted(f"no admissible configuration in {RETRY_CAP} draws")


def pappus_check(field: Field, rng) -> bool:
    """One random instance of the hexagon collinearity statement.

    Draws two distinct coplanar lines with three distinct points on each
    (off the other line), forms the three cross-joins, and reports whether
    their meets are distinct and collinear.
    """

    def draw():
        p1, q1 = _rand_point(field, 3, rng), _rand_point(field, 3, rng)
        p2, q2 = _rand_point(field, 3, rng), _rand_point(field, 3, rng)
        if p1 == q1 or p2 == q2:
            return None
        l1 = join([p1, q1])
        l2 = join([p2, q2])
        if l1 == l2:
            return None
        abc = [_combine(p1, q1, rng) for _ in range(3)]
        abc1 = [_combine(p2, q2, rng) for _ in range(3)]
        pts = abc + abc1
        for i in range(6):
            for j in range(i + 1, 6):
                if pts[i] == pts[j]:
                    return None
        if any(incident(p, l2) for p in abc) or any(incident(p, l1) for p in abc1):
            return None
        a, b, c = abc
        a1, b1, c1 = abc1
        crossings = []
        for (p, q), (r, s) in (((b, c1), (b1, c)), ((a, c1), (a1, c)), ((a, b1), (a1, b))):
            m, n = join([p, q]), join([r, s])
            if m == n:
                return None
            crossings.append(meet(m, n))
        a2, b2, c2 = (ProjPoint(x.blade) for x in crossings)
        if a2 == b2 or b2 == c2 or a2 == c2:
            return None
        return collinear_points(a2, b2, c2)

    return _retrying(draw)


def desargues_check(field: Field, rng) -> bool:
    """One random instance of the perspective-triangles statement.

    Draws a perspective center, two triangles in perspective from it with
    all hypotheses holding, and reports whether the three side-meets are
    collinear.
    """

    def draw():
        center = _rand_point(field, 3, rng)
        firsts = []
        for _ in range(3):
            q = _rand_point(field, 3, rng)
            firsts.append(q)
        a, b, c = firsts
        if collinear_points(center, a, b) or collinear_points(center, b, c) or collinear_points(center, a, c):
            return None
        if a == center or b == center or c == center:
            return None
        seconds = []
        for p in (a, b, c):
            s, t = _rand_nonzero(field, rng), _rand_nonzero(field, rng)
            seconds.append(ProjPoint(center.vector.scale(s) + p.vector.scale(t)))
        a1, b1, c1 = seconds
        pts = [a, a1, b, b1, c, c1, center]
        for i in range(7):
            for j in range(i + 1, 7):
                if pts[i] == pts[j]:
                    return None
        crossings = []
        for (p, q), (r, s) in (((b, c), (b1, c1)), ((c, a), (c1, a1)), ((a, b), (a1, b1))):
            m, n = join([p, q]), join([r, s])
            if m == n:
                return None
            crossings.append(ProjPoint(meet(m, n).blade))
        a2, b2, c2 = crossings
        return collinear_points(a2, b2, c2)

    return _retrying(draw)
