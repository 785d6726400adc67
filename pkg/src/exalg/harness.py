"""Seeded randomized verification of the classical theorems and identities.

Every trial draws its own deterministic rng from (seed, trial index), so
reports are byte-reproducible and trials could be sharded without changing
results.  Configuration generators rejection-sample until the relevant
hypotheses hold, with a hard retry cap that turns a pathological field or
dimension choice into a visible error instead of a hang.

Available theorem names are the keys of :data:`THEOREMS`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import projective
from .affine import (
    AffinePoint,
    barycenter,
    ceva_product,
    collinear,
    lines_intersect,
    menelaus_product,
    similarity_check,
)
from .duality import jacobi_identity_check, regressive, regressive_from_factors
from .errors import GeneratorExhausted, PreconditionViolated
from .exterior import wedge_vectors
from .fields import Field, FieldElement
from .matrices import Matrix
from .metric import GramForm, hodge, hodge_alt, hodge_inv, sp_ext
from .multivector import Multivector, Vector

RETRY_CAP = 1000


def rand_scalar(field: Field, rng: random.Random) -> FieldElement:
    """A small random scalar; uniform residue over GF(p)."""
    if field.kind == "prime":
        return field(rng.randrange(field.modulus))
    return field(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


def rand_nonzero(field: Field, rng: random.Random) -> FieldElement:
    while True:
        x = rand_scalar(field, rng)
        if not x.is_zero():
            return x


def rand_point(field: Field, dim: int, rng: random.Random) -> AffinePoint:
    return AffinePoint(field, [rand_scalar(field, rng) for _ in range(dim)])


def rand_vector(field: Field, dim: int, rng: random.Random) -> Vector:
    return Vector(field, [rand_scalar(field, rng) for _ in range(dim)])


def rand_matrix(field: Field, rows: int, cols: int, rng: random.Random) -> Matrix:
    return Matrix(field, [[rand_scalar(field, rng) for _ in range(cols)] for _ in range(rows)])


def rand_invertible(field: Field, n: int, rng: random.Random) -> Matrix:
    for _ in range(RETRY_CAP):
        m = rand_matrix(field, n, n, rng)
        if not m.det().is_zero():
            return m
    raise GeneratorExhausted("no invertible matrix found")


def rand_gram(field: Field, n: int, rng: random.Random) -> GramForm:
    for _ in range(RETRY_CAP):
        half = rand_matrix(field, n, n, rng)
        sym = Matrix(
            field,
            [[half[i, j] + half[j, i] for j in range(n)] for i in range(n)],
        )
        if not sym.det().is_zero():
            return GramForm(sym)
    raise GeneratorExhausted("no nondegenerate Gram form found")


def rand_homogeneous(field: Field, dim: int, grade: int, rng: random.Random) -> Multivector:
    from itertools import combinations

    terms = {}
    for idx in combinations(range(1, dim + 1), grade):
        c = rand_scalar(field, rng)
        if not c.is_zero():
            terms[idx] = c
    return Multivector(field, dim, terms)


def rand_independent(field: Field, dim: int, count: int, rng: random.Random) -> list[Vector]:
    for _ in range(RETRY_CAP):
        vs = [rand_vector(field, dim, rng) for _ in range(count)]
        if not wedge_vectors(vs).is_zero():
            return vs
    raise GeneratorExhausted("no independent family found")


def rand_blade(field: Field, dim: int, grade: int, rng: random.Random) -> Multivector:
    if grade == 0:
        return Multivector.scalar(field, dim, rand_nonzero(field, rng))
    return wedge_vectors(rand_independent(field, dim, grade, rng))


def _retrying(draw: Callable[[], bool | None]) -> bool:
    for _ in range(RETRY_CAP):
        result = draw()
        if result is not None:
            return result
    raise GeneratorExhausted(f"no admissible configuration in {RETRY_CAP} draws")


# -- affine configuration trials ----------------------------------------------


def _rand_triangle(field: Field, rng) -> tuple[AffinePoint, AffinePoint, AffinePoint] | None:
    a, b, c = (rand_point(field, 2, rng) for _ in range(3))
    if len({a, b, c}) < 3 or collinear([a, b, c]):
        return None
    return a, b, c


def _line_meet_point(p, q, r, s):
    hit = lines_intersect(p, q, r, s)
    return hit.point if hit.kind == "point" else None


def menelaus_trial(field: Field, rng: random.Random) -> bool:
    """One sample of the biconditional: ratio product is -1 iff feet collinear."""

    def transversal_case():
        tri = _rand_triangle(field, rng)
        if tri is None:
            return None
        a, b, c = tri
        u, v = rand_point(field, 2, rng), rand_point(field, 2, rng)
        if u == v:
            return None
        feet = []
        for p, q in ((b, c), (c, a), (a, b)):
            foot = _line_meet_point(u, v, p, q)
            if foot is None or foot in (a, b, c):
                return None
            feet.append(foot)
        product = menelaus_product(a, b, c, *feet)
        return product == field(-1) and collinear(feet)

    def random_feet_case():
        tri = _rand_triangle(field, rng)
        if tri is None:
            return None
        a, b, c = tri
        feet = []
        for p, q in ((b, c), (c, a), (a, b)):
            t = rand_scalar(field, rng)
            if t.is_zero() or t.is_one():
                return None
            feet.append(p + (q - p).scale(t))
        if any(f in (a, b, c) for f in feet):
            return None
        product = menelaus_product(a, b, c, *feet)
        return (product == field(-1)) == collinear(feet)

    case = transversal_case if rng.random() < 0.5 else random_feet_case
    return _retrying(case)


def _cevian_feet(field, rng, a, b, c):
    """Feet cut by a random interior-style point with all guards in place."""
    wa, wb, wc = (rand_nonzero(field, rng) for _ in range(3))
    if (wb + wc).is_zero() or (wc + wa).is_zero() or (wa + wb).is_zero():
        return None
    if (wa + wb + wc).is_zero():
        return None
    p = barycenter([(wa, a), (wb, b), (wc, c)])
    feet = (
        barycenter([(wb, b), (wc, c)]),
        barycenter([(wc, c), (wa, a)]),
        barycenter([(wa, a), (wb, b)]),
    )
    if any(f in (a, b, c) for f in feet):
        return None
    return p, feet


def _concurrent_or_parallel(a, b, c, a1, b1, c1) -> bool:
    """The concurrency side of the cevian product theorem, exactly as stated."""
    d1, d2, d3 = a1 - a, b1 - b, c1 - c
    if wedge_vectors([d1, d2]).is_zero() and wedge_vectors([d1, d3]).is_zero():
        return True
    hit = lines_intersect(a, a1, b, b1)
    if hit.kind != "point":
        return False
    p = hit.point
    if p == c or not collinear([c, c1, p]):
        return False
    return not (collinear([a, b, p]) or collinear([b, c, p]) or collinear([c, a, p]))


def ceva_trial(field: Field, rng: random.Random) -> bool:
    """One sample of the biconditional: product is +1 iff cevians concur or are parallel."""

    def concurrent_case():
        tri = _rand_triangle(field, rng)
        if tri is None:
            return None
        a, b, c = tri
        got = _cevian_feet(field, rng, a, b, c)
        if got is None:
            return None
        _, feet = got
        product = ceva_product(a, b, c, *feet)
        return product == field(1) and _concurrent_or_parallel(a, b, c, *feet)

    def parallel_case():
        tri = _rand_triangle(field, rng)
        if tri is None:
            return None
        a, b, c = tri
        h = rand_vector(field, 2, rng)
        if h.is_zero():
            return None
        feet = []
        for vertex, (p, q) in ((a, (b, c)), (b, (c, a)), (c, (a, b))):
            foot = _line_meet_point(vertex, vertex + h, p, q)
            if foot is None or foot in (a, b, c) or foot == vertex:
                return None
            feet.append(foot)
        product = ceva_product(a, b, c, *feet)
        return product == field(1)

    def random_feet_case():
        tri = _rand_triangle(field, rng)
        if tri is None:
            return None
        a, b, c = tri
        feet = []
        for p, q in ((b, c), (c, a), (a, b)):
            t = rand_scalar(field, rng)
            if t.is_zero() or t.is_one():
                return None
            feet.append(p + (q - p).scale(t))
        if any(f in (a, b, c) for f in feet):
            return None
        product = ceva_product(a, b, c, *feet)
        return (product == field(1)) == _concurrent_or_parallel(a, b, c, *feet)

    roll = rng.random()
    case = concurrent_case if roll < 0.4 else parallel_case if roll < 0.6 else random_feet_case
    return _retrying(case)


def similarity_trial(field: Field, rng: random.Random) -> bool:
    """One sample of the equivalence between side-parallelism and equal ratios."""

    def parallel_case():
        tri = _rand_triangle(field, rng)
        if tri is None:
            return None
        a, b, c = tri
        t = rand_nonzero(field, rng)
        x = c + (b - a).scale(t)
        return _checked_similarity(a, b, c, x, expect_parallel=True)

    def generic_case():
        tri = _rand_triangle(field, rng)
        if tri is None:
            return None
        a, b, c = tri
        x = rand_point(field, 2, rng)
        return _checked_similarity(a, b, c, x, expect_parallel=None)

    case = parallel_case if rng.random() < 0.5 else generic_case
    return _retrying(case)


def _checked_similarity(a, b, c, x, expect_parallel):
    try:
        parallel, ratios_equal = similarity_check(a, b, c, x)
    except PreconditionViolated:
        return None
    if expect_parallel is True and not parallel:
        return None
    return parallel == ratios_equal


def desargues_affine_trial(field: Field, rng: random.Random) -> bool:
    """One instance of perspective triangles with all side-meets existing."""

    def draw():
        tri = _rand_triangle(field, rng)
        if tri is None:
            return None
        a, b, c = tri
        p = rand_point(field, 2, rng)
        if p in (a, b, c) or collinear([a, b, p]) or collinear([b, c, p]) or collinear([c, a, p]):
            return None
        primed = []
        for v in (a, b, c):
            t = rand_scalar(field, rng)
            if t.is_zero() or t.is_one():
                return None
            primed.append(p + (v - p).scale(t))
        a1, b1, c1 = primed
        pts = [a, a1, b, b1, c, c1]
        if len(set(pts)) < 6:
            return None
        meets = []
        for (s1, s2), (t1, t2) in (((b, c), (b1, c1)), ((c, a), (c1, a1)), ((a, b), (a1, b1))):
            m = _line_meet_point(s1, s2, t1, t2)
            if m is None:
                return None
            meets.append(m)
        return collinear(meets)

    return _retrying(draw)


def pappus_affine_trial(field: Field, rng: random.Random) -> bool:
    """One instance of the hexagon theorem with all cross-meets existing."""

    def draw():
        p0, u = rand_point(field, 2, rng), rand_vector(field, 2, rng)
        q0, w = rand_point(field, 2, rng), rand_vector(field, 2, rng)
        if u.is_zero() or w.is_zero():
            return None
        def on(base, direction, t):
            return base + direction.scale(t)
        ts = [rand_scalar(field, rng) for _ in range(6)]
        a, b, c = (on(p0, u, t) for t in ts[:3])
        a1, b1, c1 = (on(q0, w, t) for t in ts[3:])
        pts = [a, b, c, a1, b1, c1]
        if len(set(pts)) < 6:
            return None
        if collinear([a, b, a1]) or collinear([a1, b1, a]):
            return None  # shared points or coincident lines
        meets = []
        for (s1, s2), (t1, t2) in (((b, c1), (b1, c)), ((a, c1), (a1, c)), ((a, b1), (a1, b))):
            m = _line_meet_point(s1, s2, t1, t2)
            if m is None:
                return None
            meets.append(m)
        if len(set(meets)) < 3:
            return None
        return collinear(meets)

    return _retrying(draw)


# -- identity suite trials ----------------------------------------------------


def hodge_identities_trial(field: Field, rng: random.Random, dim: int = 4) -> bool:
    """One random (form, r, s) sample of the star identity family."""
    p = rng.randrange(0, dim + 1)
    g = rand_gram(field, dim, rng)
    r = rand_homogeneous(field, dim, p, rng)
    s = rand_homogeneous(field, dim, p, rng)
    g_det = g.det
    star_r, star_s = hodge(g, r), hodge(g, s)
    if sp_ext(g, r, s) != g_det * sp_ext(g, star_r, star_s):
        return False
    if r.wedge(star_s) != s.wedge(star_r):
        return False
    sign = field(-1) ** (p * (dim - p))
    if hodge(g, star_r) != r.scale(g_det.inverse() * sign):
        return False
    if hodge_alt(g, r) != star_r:
        return False
    if hodge_inv(g, star_s.wedge(star_r)) != regressive(s, r):
        return False
    return True


def jacobi_trial(field: Field, rng: random.Random, dim: int = 4) -> bool:
    """One random invertible matrix and block size; both identity sides equal."""
    n = rng.randrange(0, dim + 1)
    m = rand_invertible(field, dim, rng)
    lhs, rhs = jacobi_identity_check(m, n)
    return lhs == rhs


def grassmann_trial(field: Field, rng: random.Random, dim: int = 4) -> bool:
    """Join/meet grades against rank-computed subspace dimensions."""
    gx = rng.randrange(1, dim)
    gy = rng.randrange(1, dim)
    xs = rand_independent(field, dim, gx, rng)
    ys = rand_independent(field, dim, gy, rng)
    x = projective.ProjFlat(wedge_vectors(xs))
    y = projective.ProjFlat(wedge_vectors(ys))
    stacked = Matrix(field, [list(v.coords) for v in xs + ys])
    sum_dim = stacked.rank()
    joined = projective.join([x, y])
    met = projective.meet(x, y)
    return joined.grade == sum_dim and met.grade == gx + gy - sum_dim


def regressive_eq_trial(field: Field, rng: random.Random, dim: int = 4) -> bool:
    """Both factor-sum evaluations against the annihilator-map product."""
    l = rng.randrange(1, dim + 1)
    m = rng.randrange(max(1, dim - l), dim + 1)
    us = rand_independent(field, dim, l, rng)
    vs = rand_independent(field, dim, m, rng)
    by_map = regressive(wedge_vectors(us), wedge_vectors(vs))
    u_side = regressive_from_factors(us, vs, side="u")
    v_side = regressive_from_factors(us, vs, side="v")
    return u_side == by_map and v_side == by_map


THEOREMS: dict[str, Callable] = {
    "pappus": lambda field, rng, dim=3: projective.pappus_check(field, rng),
    "desargues": lambda field, rng, dim=3: projective.desargues_check(field, rng),
    "menelaus": lambda field, rng, dim=2: menelaus_trial(field, rng),
    "ceva": lambda field, rng, dim=2: ceva_trial(field, rng),
    "similarity": lambda field, rng, dim=2: similarity_trial(field, rng),
    "hodge-identities": hodge_identities_trial,
    "jacobi": jacobi_trial,
    "grassmann": grassmann_trial,
    "regressive-eq": regressive_eq_trial,
}


@dataclass
class TrialReport:
    theorem: str
    field: str
    trials: int
    seed: int
    passed: int

    @property
    def failed(self) -> int:
        return self.trials - self.passed

    def summary(self) -> str:
        return (
            f"theorem={self.theorem} field={self.field} trials={self.trials} seed={self.seed}\n"
            f"passed {self.passed}/{self.trials}"
        )


def run_trials(theorem: str, field: Field, trials: int, seed: int, dim: int | None = None) -> TrialReport:
    """Run seeded trials of one theorem; per-trial rngs derive from (seed, index)."""
    if theorem not in THEOREMS:
        raise KeyError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}")
    fn = THEOREMS[theorem]
    passed = 0
    for i in range(trials):
        rng = random.Random(f"{seed}:{i}")
        kwargs = {} if dim is None else {"dim": dim}
        if fn(field, rng, **kwargs):
            passed += 1
    return TrialReport(theorem, str(field), trials, seed, passed)
