import random
from fractions import Fraction

import pytest

from exalg.affine import AffinePoint
from exalg.duality import annihilator_blade
from exalg.errors import (
    GeneratorExhausted,
    NotABlade,
    NotAFrame,
    NotComplementary,
    PointInCenter,
    ZeroInput,
    ZeroVector,
)
from exalg.exterior import wedge_vectors
from exalg.fields import RATIONALS as Q, gf
from exalg.matrices import Matrix
from exalg.multivector import Multivector, Vector
from exalg.projective import (
    ProjFlat,
    ProjFrame,
    ProjPoint,
    ProjTransform,
    central_project,
    collinear_points,
    dehomogenize,
    desargues_check,
    embed_affine,
    embed_direction,
    general_position,
    incident,
    join,
    meet,
    pappus_check,
    standardize_frame,
    transform_apply,
    transform_from_frames,
    transforms_equal,
)

F5 = gf(5)
F101 = gf(101)


def v(*coords, field=Q):
    return Vector(field, coords)


def e(*idx, dim=4, coeff=1):
    return Multivector.basis_blade(Q, dim, idx, coeff=coeff)


def pt(*coords, field=Q):
    return ProjPoint(Vector(field, coords))


def rand_point(field, dim, rng):
    while True:
        coords = [field(rng.randrange(field.modulus)) for _ in range(dim)]
        vec = Vector(field, coords)
        if not vec.is_zero():
            return ProjPoint(vec)


# -- representation ----------------------------------------------------------------


def test_flat_rejects_zero_and_non_blades():
    with pytest.raises(ZeroInput):
        ProjFlat(Multivector.zero(Q, 4))
    with pytest.raises(NotABlade):
        ProjFlat(e(1, 2) + e(3, 4))


def test_flat_equality_is_proportionality():
    a = ProjFlat(e(1, 2))
    assert a == ProjFlat(e(1, 2, coeff=7))
    assert a != ProjFlat(e(1, 3))
    assert ProjFlat(e(1, 2)).pdim == 1


def test_embed_and_dehomogenize():
    p = AffinePoint(Q, (3, 5))
    lifted = embed_affine(p)
    assert lifted.vector == v(1, 3, 5)
    kind, back = dehomogenize(lifted)
    assert kind == "affine" and back == p

    direction = embed_direction(v(1, 2))
    assert direction.vector == v(0, 1, 2)
    kind, d = dehomogenize(direction)
    assert kind == "infinity" and d == v(1, 2)

    kind, scaled = dehomogenize(pt(2, 6, 10))
    assert kind == "affine" and scaled == AffinePoint(Q, (3, 5))
    kind, origin = dehomogenize(pt(1, 0, 0))
    assert kind == "affine" and origin == AffinePoint(Q, (0, 0))

    with pytest.raises(ZeroVector):
        embed_direction(Vector(Q, (0, 0)))


# -- join and meet ----------------------------------------------------------------


def test_join_point_with_line_exact():
    point = pt(1, 0, 0, 0)
    mu = ProjFlat(wedge_vectors([v(1, 1, 0, 0), v(1, 0, 1, 1)]))
    assert join([point, mu]).blade == e(1, 2, 3) + e(1, 2, 4)


def test_join_idempotent_and_connecting_line():
    p1, p2 = pt(1, 2, 3), pt(0, 1, 1)
    assert join([p1, p1]) == p1
    line = join([p1, p2])
    assert line.grade == 2
    assert line.contains_vector(p1.vector)
    assert line.contains_vector(p2.vector)


def test_meet_plane_plane_exact():
    plane = ProjFlat(
        Multivector.parse("1*e{1,3,4}-1*e{1,2,4}+1*e{1,2,3}+1*e{2,3,4}", Q, 4)
    )
    other = ProjFlat(e(1, 3, 4))
    line = meet(plane, other)
    assert line.blade == Multivector.parse("1*e{1,3}-1*e{1,4}-1*e{3,4}", Q, 4)


def test_meet_lines_in_space():
    lam = ProjFlat(e(1, 2) + e(1, 3) + e(1, 4))
    mu = ProjFlat(wedge_vectors([v(1, 1, 0, 0), v(1, 0, 1, 1)]))
    point = meet(lam, mu)
    assert point == ProjFlat(Multivector.parse("2*e{1}+1*e{2}+1*e{3}+1*e{4}", Q, 4))
    assert meet(lam, lam) == lam


def test_meet_disjoint_flats_is_empty():
    a = ProjFlat(e(1, 2, dim=4))
    b = ProjFlat(e(3, 4, dim=4))
    out = meet(a, b)
    assert out.is_empty() and out.pdim == -1


def test_join_meet_duality(rng):
    for _ in range(15):
        ga, gb = rng.randint(1, 3), rng.randint(1, 3)
        a_vecs = [Vector(F101, [rng.randrange(101) for _ in range(4)]) for _ in range(ga)]
        b_vecs = [Vector(F101, [rng.randrange(101) for _ in range(gb)]) for _ in range(gb)]
        b_vecs = [Vector(F101, [rng.randrange(101) for _ in range(4)]) for _ in range(gb)]
        ba, bb = wedge_vectors(a_vecs), wedge_vectors(b_vecs)
        if ba.is_zero() or bb.is_zero():
            continue
        a, b = ProjFlat(ba), ProjFlat(bb)
        dual_wedge = annihilator_blade(a.blade).wedge(annihilator_blade(b.blade))
        if not dual_wedge.is_zero():
            met = meet(a, b)
            assert annihilator_blade(met.blade).proportional(dual_wedge) is not None
        joined_blade = a.blade.wedge(b.blade)
        assert (not joined_blade.is_zero()) == meet(a, b).is_empty()


def test_grassmann_relation(rng):
    for _ in range(20):
        ga, gb = rng.randint(1, 3), rng.randint(1, 3)
        a_vecs = [Vector(F101, [rng.randrange(101) for _ in range(4)]) for _ in range(ga)]
        b_vecs = [Vector(F101, [rng.randrange(101) for _ in range(4)]) for _ in range(gb)]
        if wedge_vectors(a_vecs).is_zero() or wedge_vectors(b_vecs).is_zero():
            continue
        a = ProjFlat(wedge_vectors(a_vecs))
        b = ProjFlat(wedge_vectors(b_vecs))
        stacked = Matrix(F101, [list(x.coords) for x in a_vecs + b_vecs])
        sum_dim = stacked.rank()
        assert join([a, b]).grade == sum_dim
        assert meet(a, b).grade == ga + gb - sum_dim


def test_incident():
    p1 = pt(1, 2, 3)
    p2 = pt(0, 1, 1)
    line = join([p1, p2])
    assert incident(p1, line)
    assert incident(line, line)
    assert not incident(p1, p2)


def test_collinear_points():
    assert collinear_points(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0))
    assert not collinear_points(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1))
    p = pt(1, 2, 3)
    assert collinear_points(p, pt(0, 1, 1), p)


# -- frames and transformations ------------------------------------------------------


def _epsilon_frame(dim=3):
    unit = pt(*([1] * dim))
    basis = [ProjPoint(Vector.basis(Q, dim, i)) for i in range(1, dim + 1)]
    return ProjFrame([unit, *basis])


def test_general_position():
    frame_pts = _epsilon_frame().points
    assert general_position(frame_pts)
    assert not general_position([pt(1, 0, 0), pt(1, 0, 0)])
    assert not general_position([pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(0, 0, 1)])


def test_standardize_epsilon_frame():
    xs = standardize_frame(_epsilon_frame())
    assert xs == [Vector.basis(Q, 3, i) for i in (1, 2, 3)]


def test_standardize_rescaling_invariant(rng):
    for _ in range(10):
        pts = []
        while len(pts) < 4:
            candidate = rand_point(F101, 3, rng)
            pts.append(candidate)
            try:
                frame = ProjFrame(pts[-4:]) if len(pts) >= 4 else None
            except NotAFrame:
                pts.pop()
                continue
        frame = ProjFrame(pts)
        xs = standardize_frame(frame)
        rescaled = ProjFrame(
            [ProjPoint(p.vector.scale(F101(rng.randrange(1, 101)))) for p in frame.points]
        )
        assert standardize_frame(rescaled) == xs
        # unit-point identity: x0 = x1 + ... + xd up to the canonical scale
        total = xs[0]
        for x in xs[1:]:
            total = total + x
        assert ProjPoint(total) == frame.points[0]
        assert not wedge_vectors(xs).is_zero()


def test_transform_from_frames_identity_and_action(rng):
    frame = _epsilon_frame()
    ident = transform_from_frames(frame, frame)
    assert transforms_equal(ident, ProjTransform(Matrix.identity(Q, 3)))

    for _ in range(5):
        pts = []
        while True:
            pts = [rand_point(F101, 3, rng) for _ in range(4)]
            try:
                src = ProjFrame(pts)
                break
            except NotAFrame:
                continue
        while True:
            pts = [rand_point(F101, 3, rng) for _ in range(4)]
            try:
                dst = ProjFrame(pts)
                break
            except NotAFrame:
                continue
        t = transform_from_frames(src, dst)
        for sp, dp in zip(src.points, dst.points):
            assert transform_apply(t, sp) == dp


def test_transform_uniqueness_under_rescaling(rng):
    # Rescaling every representative yields the same canonical transform.
    frame = _epsilon_frame()
    other = ProjFrame([pt(1, 2, 4), pt(1, 1, 0), pt(0, 1, 1), pt(1, 0, 1)])
    t1 = transform_from_frames(frame, other)
    scaled_src = ProjFrame([ProjPoint(p.vector.scale(Q(3))) for p in frame.points])
    scaled_dst = ProjFrame([ProjPoint(p.vector.scale(Q(-2))) for p in other.points])
    t2 = transform_from_frames(scaled_src, scaled_dst)
    assert transforms_equal(t1, t2)


def test_transforms_equal_scaling():
    t = ProjTransform(Matrix(Q, [[1, 2], [3, 4]]))
    t5 = ProjTransform(Matrix(Q, [[5, 10], [15, 20]]))
    assert transforms_equal(t, t5)
    ident = ProjTransform(Matrix.identity(Q, 3))
    stretched = ProjTransform(Matrix(Q, [[1, 0, 0], [0, 1, 0], [0, 0, 2]]))
    assert not transforms_equal(ident, stretched)


def test_transform_apply_basics():
    ident = ProjTransform(Matrix.identity(Q, 3))
    p = pt(1, 2, 3)
    assert transform_apply(ident, p) == p
    scaled = ProjTransform(Matrix(Q, [[4, 0, 0], [0, 4, 0], [0, 0, 4]]))
    assert transform_apply(scaled, p) == p
    perm = ProjTransform(Matrix(Q, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]))
    assert transform_apply(perm, pt(1, 0, 0)) == pt(0, 0, 1)


# -- central projection ---------------------------------------------------------------


def test_central_project_coordinate_example():
    center = pt(0, 0, 1)
    target = ProjFlat.from_vectors([v(1, 0, 0), v(0, 1, 0)])
    image = central_project(center, target, pt(1, 2, 5))
    assert image == pt(1, 2, 0)


def test_central_project_fixes_target_points():
    center = pt(0, 0, 1)
    target = ProjFlat.from_vectors([v(1, 0, 0), v(0, 1, 0)])
    p = pt(3, -4, 0)
    assert central_project(center, target, p) == p


def test_central_project_center_raises():
    center = pt(0, 0, 1)
    target = ProjFlat.from_vectors([v(1, 0, 0), v(0, 1, 0)])
    with pytest.raises(PointInCenter):
        central_project(center, target, pt(0, 0, 7))


def test_central_project_requires_complementary():
    center = pt(1, 0, 0)
    target = ProjFlat.from_vectors([v(1, 0, 0), v(0, 1, 0)])
    with pytest.raises(NotComplementary):
        central_project(center, target, pt(0, 0, 1))


def test_central_project_agrees_with_meet_join(rng):
    for _ in range(15):
        center = rand_point(F101, 4, rng)
        t_vecs = [Vector(F101, [rng.randrange(101) for _ in range(4)]) for _ in range(3)]
        if wedge_vectors(t_vecs).is_zero():
            continue
        target = ProjFlat(wedge_vectors(t_vecs))
        if not meet(ProjFlat(center.blade), target).is_empty():
            continue
        p = rand_point(F101, 4, rng)
        if p == center:
            continue
        image = central_project(center, target, p)
        via_incidence = meet(join([center, p]), target)
        assert ProjFlat(image.blade) == via_incidence


# -- configuration theorems ------------------------------------------------------------


@pytest.mark.parametrize("field", [Q, F5, F101], ids=["rationals", "gf5", "gf101"])
def test_pappus_random_configurations(field, rng):
    for _ in range(12):
        assert pappus_check(field, rng)


@pytest.mark.parametrize("field", [Q, F5, F101], ids=["rationals", "gf5", "gf101"])
def test_desargues_random_configurations(field, rng):
    for _ in range(12):
        assert desargues_check(field, rng)


def test_desargues_with_crossing_at_infinity():
    # Two triangles in perspective with matching parallel sides: the third
    # crossing lies at infinity together with the direction of those sides.
    a, b, c = pt(1, 0, 0), pt(1, 1, 0), pt(1, 0, 1)
    center = pt(1, 2, 2)

    def on_line(p, q, s, t):
        return ProjPoint(p.vector.scale(Q(s)) + q.vector.scale(Q(t)))

    a1 = on_line(center, a, 1, 1)
    b1 = on_line(center, b, 1, 1)
    c1 = on_line(center, c, 1, 1)
    ab, a1b1 = join([a, b]), join([a1, b1])
    crossing = meet(ab, a1b1)
    assert crossing.grade == 1
    kind, direction = dehomogenize(ProjPoint(crossing.blade))
    assert kind == "infinity"
    bc_cross = ProjPoint(meet(join([b, c]), join([b1, c1])).blade)
    ca_cross = ProjPoint(meet(join([c, a]), join([c1, a1])).blade)
    assert collinear_points(ProjPoint(crossing.blade), bc_cross, ca_cross)
