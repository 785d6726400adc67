import random
from fractions import Fraction

import pytest

from exalg.errors import NotABlade, NotComplementary, TooManyColumns, ZeroInput
from exalg.exterior import (
    ExtendedCoordView,
    det_of_map,
    ext_power_map,
    factor_blade,
    is_blade,
    plucker_from_matrix,
    project_along,
    reflect_along,
    sym_basis_count,
    wedge_vectors,
)
from exalg.fields import RATIONALS as Q, gf
from exalg.matrices import Matrix
from exalg.multivector import Multivector, Vector

from oracles import det_permutation_sum

F101 = gf(101)


def v(*coords, field=Q):
    return Vector(field, coords)


def e(*idx, dim=4, coeff=1):
    return Multivector.basis_blade(Q, dim, idx, coeff=coeff)


def rand_vector(field, dim, rng):
    if field.kind == "prime":
        return Vector(field, [rng.randrange(field.modulus) for _ in range(dim)])
    return Vector(field, [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(dim)])


# -- wedge_vectors -------------------------------------------------------------


def test_wedge_vectors_line_example():
    assert wedge_vectors([v(1, 0, 0, 0), v(1, 1, 1, 1)]) == e(1, 2) + e(1, 3) + e(1, 4)


def test_wedge_vectors_dependence():
    w = v(2, -1, 3, 0)
    assert wedge_vectors([w, w.scale(Q(2))]).is_zero()
    basis3 = [Vector.basis(Q, 3, i) for i in (1, 2, 3)]
    assert wedge_vectors(basis3) == Multivector.basis_blade(Q, 3, (1, 2, 3))


def test_independence_criterion(rng):
    for _ in range(30):
        count = rng.randint(1, 4)
        vs = [rand_vector(F101, 4, rng) for _ in range(count)]
        stacked = Matrix(F101, [list(x.coords) for x in vs])
        assert (not wedge_vectors(vs).is_zero()) == (stacked.rank() == count)


# -- exterior powers of maps ----------------------------------------------------


def test_ext_power_map_grade_one_is_matrix_action(rng):
    m = Matrix(Q, [[1, 2, 0], [0, 1, -1], [3, 0, 1]])
    w = v(1, -2, 4, field=Q)
    for _ in range(5):
        x = rand_vector(Q, 3, rng)
        image = ext_power_map(m, 1, Multivector.from_vector(x))
        assert image.as_vector() == m.apply(x)


def test_ext_power_identity_on_blades():
    ident = Matrix.identity(Q, 4)
    for blade in (e(1, 2), e(1, 3, 4), e(2)):
        p = blade.grade()
        assert ext_power_map(ident, p, blade) == blade


def test_ext_power_functorial(rng):
    for _ in range(10):
        f = Matrix(F101, [[rng.randrange(101) for _ in range(3)] for _ in range(3)])
        g = Matrix(F101, [[rng.randrange(101) for _ in range(3)] for _ in range(3)])
        m = Multivector.basis_blade(F101, 3, (1, 2)) + Multivector.basis_blade(F101, 3, (2, 3))
        via_composite = ext_power_map(g @ f, 2, m)
        via_stages = ext_power_map(g, 2, ext_power_map(f, 2, m))
        assert via_composite == via_stages


def test_det_of_map_cross_checks(rng):
    assert det_of_map(Matrix.identity(Q, 3)) == Q(1)
    assert det_of_map(Matrix(Q, [[2, 0], [0, 3]])) == Q(6)
    for _ in range(10):
        m = Matrix(Q, [[Fraction(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)])
        assert det_of_map(m) == m.det() == det_permutation_sum(m)


# -- coordinates ------------------------------------------------------------------


def test_plucker_standard_columns():
    a = Matrix.from_columns([Vector.basis(Q, 4, 1), Vector.basis(Q, 4, 2)])
    assert plucker_from_matrix(a) == e(1, 2)


def test_plucker_line_example_and_dependence():
    a = Matrix.from_columns([v(1, 0, 0, 0), v(1, 1, 1, 1)])
    assert plucker_from_matrix(a) == e(1, 2) + e(1, 3) + e(1, 4)
    dep = Matrix.from_columns([v(1, 2, 0, 0), v(2, 4, 0, 0)])
    assert plucker_from_matrix(dep).is_zero()


def test_plucker_agrees_with_wedge(rng):
    for _ in range(20):
        cols = [rand_vector(F101, 5, rng) for _ in range(rng.randint(1, 4))]
        assert plucker_from_matrix(Matrix.from_columns(cols)) == wedge_vectors(cols)


def test_plucker_too_many_columns():
    with pytest.raises(TooManyColumns):
        plucker_from_matrix(Matrix(Q, [[1, 2, 3], [4, 5, 6]]))


def test_extended_coord_view():
    view = ExtendedCoordView(e(1, 3, coeff=5))
    assert view[1, 3] == Q(5)
    assert view[3, 1] == Q(-5)
    assert view[1, 1] == Q(0)
    assert view[2, 3] == Q(0)


# -- blade factorization ------------------------------------------------------------


def test_factor_simple_blade():
    factors = factor_blade(e(1, 2))
    assert wedge_vectors(factors) == e(1, 2)


def test_factor_line_blade_example():
    m = Multivector.parse("-1*e{1,4}+1*e{1,3}-1*e{3,4}", Q, 4)
    factors = factor_blade(m)
    assert len(factors) == 2
    assert wedge_vectors(factors) == m


def test_factor_rejects_non_blade():
    with pytest.raises(NotABlade):
        factor_blade(e(1, 2) + e(3, 4))
    assert not is_blade(e(1, 2) + e(3, 4))


def test_factor_zero_and_scalar():
    with pytest.raises(ZeroInput):
        factor_blade(Multivector.zero(Q, 4))
    assert factor_blade(Multivector.scalar(Q, 4, 7)) == []
    assert is_blade(Multivector.scalar(Q, 4, 7))
    assert is_blade(Multivector.zero(Q, 4))


def test_factor_round_trip_random(rng):
    for _ in range(40):
        dim = rng.randint(2, 8)
        grade = rng.randint(1, min(4, dim))
        vs = [rand_vector(F101, dim, rng) for _ in range(grade)]
        blade = wedge_vectors(vs)
        if blade.is_zero():
            continue
        refactored = factor_blade(blade)
        assert wedge_vectors(refactored) == blade
        assert is_blade(blade)


def test_top_minus_one_grade_always_blade(rng):
    # Any grade d-1 element is a blade (or zero).
    for _ in range(20):
        dim = rng.randint(2, 6)
        terms = {}
        from itertools import combinations

        for idx in combinations(range(1, dim + 1), dim - 1):
            c = rng.randrange(101)
            if c:
                terms[idx] = F101(c)
        m = Multivector(F101, dim, terms)
        if not m.is_zero():
            assert is_blade(m)


def test_wedge_membership_test(rng):
    # v lies in the span of a blade iff v wedge blade vanishes.
    vs = [v(1, 2, 0, 0), v(0, 1, 1, 0)]
    blade = wedge_vectors(vs)
    inside = vs[0] + vs[1].scale(Q(3))
    outside = v(0, 0, 0, 1)
    assert Multivector.from_vector(inside).wedge(blade).is_zero()
    assert not Multivector.from_vector(outside).wedge(blade).is_zero()


# -- projections and reflections -------------------------------------------------------


def test_project_reflect_plane_example():
    w_basis = [Vector.basis(Q, 2, 1)]
    x_basis = [Vector.basis(Q, 2, 2)]
    target = Vector(Q, (3, 5))
    assert project_along(w_basis, x_basis, target) == Vector(Q, (3, 0))
    assert reflect_along(w_basis, x_basis, target) == Vector(Q, (3, -5))


def test_project_idempotent_reflect_involutary(rng):
    for _ in range(15):
        vs = [rand_vector(Q, 4, rng) for _ in range(4)]
        if wedge_vectors(vs).is_zero():
            continue
        w_basis, x_basis = vs[:2], vs[2:]
        target = rand_vector(Q, 4, rng)
        p = project_along(w_basis, x_basis, target)
        assert project_along(w_basis, x_basis, p) == p
        r = reflect_along(w_basis, x_basis, target)
        assert reflect_along(w_basis, x_basis, r) == target


def test_project_fixes_members():
    w_basis = [v(1, 1, 0, 0), v(0, 0, 1, 0)]
    x_basis = [v(0, 1, 0, 0), v(0, 0, 0, 1)]
    member = w_basis[0].scale(Q(2)) + w_basis[1].scale(Q(-1))
    assert project_along(w_basis, x_basis, member) == member


def test_project_requires_complementary():
    with pytest.raises(NotComplementary):
        project_along([v(1, 0, 0, 0)], [v(2, 0, 0, 0)], v(1, 1, 1, 1))
    with pytest.raises(NotComplementary):
        project_along([v(1, 0, 0, 0)], [v(0, 1, 0, 0)], v(1, 1, 1, 1))


# -- symmetric power count -----------------------------------------------------------


@pytest.mark.parametrize("n,p,expected", [(2, 2, 3), (3, 2, 6), (1, 5, 1), (4, 0, 1)])
def test_sym_basis_count(n, p, expected):
    assert sym_basis_count(n, p) == expected
