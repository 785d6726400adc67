"""Built-in worked examples with frozen expected values.

These are small, fully worked incidence computations in dimensions 3 and 4
whose results are known in closed form; the `examples` CLI subcommand
replays them and diffs against the expectations, so any regression in the
products, the complement map, or the meet/join fold flips the exit status.
"""

from __future__ import annotations

from typing import Iterator

from .duality import annihilator_blade, regressive
from .exterior import factor_blade, wedge_vectors
from .fields import RATIONALS as Q
from .multivector import Multivector, Vector
from .projective import ProjPoint, collinear_points, join, meet, ProjFlat

D = 4

# The complement (annihilator) table in dimension 4: index set -> signed complement.
COMPLEMENT_TABLE = {
    (): (1, (1, 2, 3, 4)),
    (1,): (1, (2, 3, 4)),
    (2,): (-1, (1, 3, 4)),
    (3,): (1, (1, 2, 4)),
    (4,): (-1, (1, 2, 3)),
    (1, 2): (1, (3, 4)),
    (1, 3): (-1, (2, 4)),
    (1, 4): (1, (2, 3)),
    (2, 3): (1, (1, 4)),
    (2, 4): (-1, (1, 3)),
    (3, 4): (1, (1, 2)),
    (1, 2, 3): (1, (4,)),
    (1, 2, 4): (-1, (3,)),
    (1, 3, 4): (1, (2,)),
    (2, 3, 4): (-1, (1,)),
    (1, 2, 3, 4): (1, ()),
}

# Basis blades as signed regressive products of coordinate-hyperplane blades.
# hp(i) below is the blade omitting the i-th basis vector.
HYPERPLANE_PRODUCTS = [
    ((3, 4), -1, (1, 2)),
    ((2, 4), -1, (1, 3)),
    ((2, 3), -1, (1, 4)),
    ((1, 4), -1, (2, 3)),
    ((1, 3), -1, (2, 4)),
    ((1, 2), -1, (3, 4)),
    ((1, 2, 3), -1, (4,)),
    ((1, 2, 4), -1, (3,)),
    ((1, 3, 4), -1, (2,)),
    ((2, 3, 4), -1, (1,)),
    ((1, 2, 3, 4), 1, ()),
]


def _e(*idx) -> Multivector:
    return Multivector.basis_blade(Q, D, idx)


def _hp(i: int) -> Multivector:
    """The coordinate-hyperplane blade omitting basis vector i."""
    return _e(*(j for j in range(1, D + 1) if j != i))


def _mv(text: str, dim: int = D) -> Multivector:
    return Multivector.parse(text, Q, dim)


def _check_complement_table() -> Iterator[tuple[str, bool, str]]:
    for idx, (sign, comp) in COMPLEMENT_TABLE.items():
        got = annihilator_blade(_e(*idx) if idx else Multivector.scalar(Q, D, 1))
        want = Multivector.basis_blade(Q, D, comp, coeff=sign, dual=True)
        label = "complement of e{" + ",".join(map(str, idx)) + "}"
        yield label, got == want, f"expected {want}, got {got}"


def _check_hyperplane_products() -> Iterator[tuple[str, bool, str]]:
    for omitted, sign, expect_idx in HYPERPLANE_PRODUCTS:
        prod = Multivector.basis_blade(Q, D, tuple(range(1, D + 1)))  # regressive unit
        for i in omitted:
            prod = regressive(prod, _hp(i))
        want = Multivector.basis_blade(Q, D, expect_idx, coeff=sign)
        label = "hyperplane product " + ".".join(f"~{i}" for i in omitted)
        yield label, prod == want, f"expected {want}, got {prod}"


def _check_plane_meet() -> Iterator[tuple[str, bool, str]]:
    v = lambda *c: Vector(Q, c)
    plane = wedge_vectors([v(1, 1, 0, 0), v(1, 0, 1, 0), v(1, 0, 0, 1)])
    want_plane = _mv("1*e{1,2,3}-1*e{1,2,4}+1*e{1,3,4}+1*e{2,3,4}")
    yield "spanned plane expansion", plane == want_plane, f"expected {want_plane}, got {plane}"

    line = regressive(plane, _hp(2))
    want_line = _mv("1*e{1,3}-1*e{1,4}-1*e{3,4}")
    yield "plane-plane meet line", line == want_line, f"expected {want_line}, got {line}"

    pierce = {
        1: _mv("1*e{3}-1*e{4}"),
        2: _mv("0"),
        3: _mv("-1*e{1}-1*e{4}"),
        4: _mv("-1*e{1}-1*e{3}"),
    }
    for i, want in pierce.items():
        got = regressive(line, _hp(i))
        yield f"line against hyperplane {i}", got == want, f"expected {want}, got {got}"


def _check_line_line() -> Iterator[tuple[str, bool, str]]:
    v = lambda *c: Vector(Q, c)
    lam = wedge_vectors([v(1, 0, 0, 0), v(1, 1, 1, 1)])
    mu = wedge_vectors([v(1, 1, 0, 0), v(1, 0, 1, 1)])
    want_lam = _mv("1*e{1,2}+1*e{1,3}+1*e{1,4}")
    yield "first line expansion", lam == want_lam, f"expected {want_lam}, got {lam}"

    prog = lam.wedge(mu)
    yield "intersecting lines wedge to zero", prog.is_zero(), f"got {prog}"

    span1 = Multivector.from_vector(v(1, 0, 0, 0)).wedge(mu)
    span2 = Multivector.from_vector(v(1, 1, 1, 1)).wedge(mu)
    want_span = _mv("1*e{1,2,3}+1*e{1,2,4}")
    yield "span via first point factor", span1 == want_span, f"expected {want_span}, got {span1}"
    # The other factor spans the same plane with the opposite scale.
    yield "span via second point factor", span2 == -want_span, f"expected {-want_span}, got {span2}"

    reg = regressive(lam, mu)
    yield "regressive of coplanar lines is zero", reg.is_zero(), f"got {reg}"

    plane_a = _hp(3) + _hp(2)
    plane_b = _hp(3) + _hp(4)
    refactored = -regressive(plane_a, plane_b)
    yield "line as hyperplane product", refactored == want_lam, f"expected {want_lam}, got {refactored}"

    meet_point = regressive(mu, plane_a)
    want_point = _mv("-2*e{1}-1*e{2}-1*e{3}-1*e{4}")
    yield "piercing point of second line", meet_point == want_point, f"expected {want_point}, got {meet_point}"

    contained = regressive(mu, plane_b)
    yield "second line lies in the span plane", contained.is_zero(), f"got {contained}"

    joined = join([ProjFlat(lam), ProjFlat(mu)])
    yield "fold join of the two lines", joined == ProjFlat(want_span), f"expected {want_span} up to scale, got {joined}"

    met = meet(ProjFlat(lam), ProjFlat(mu))
    yield "fold meet of the two lines", met == ProjFlat(want_point), f"expected {want_point} up to scale, got {met}"


def _check_hexagon_collinearity() -> Iterator[tuple[str, bool, str]]:
    a_par, c_par = Q(2), Q(3)
    v = lambda *c: Vector(Q, c)
    pt = lambda *c: ProjPoint(v(*c))
    a, b = pt(1, 0, 0), pt(0, 1, 0)
    c_prime, b_prime = pt(0, 0, 1), pt(1, 1, 1)
    c = pt(1, c_par, 0)
    a_prime = pt(1, 1, a_par)

    a2 = ProjPoint(meet(join([b, c_prime]), join([b_prime, c])).blade)
    b2 = ProjPoint(meet(join([a, c_prime]), join([a_prime, c])).blade)
    c2 = ProjPoint(meet(join([a, b_prime]), join([a_prime, b])).blade)

    one = Q.one
    want_a2 = pt(0, one - c_par, 1)
    want_b2 = pt(one - c_par, 0, -c_par * a_par)
    want_c2 = pt(1, a_par, a_par)
    yield "first cross point", a2 == want_a2, f"expected {want_a2.vector}, got {a2.vector}"
    yield "second cross point", b2 == want_b2, f"expected {want_b2.vector}, got {b2.vector}"
    yield "third cross point", c2 == want_c2, f"expected {want_c2.vector}, got {c2.vector}"

    dep = (
        want_a2.vector.scale(a_par)
        + want_b2.vector
        + want_c2.vector.scale(c_par - one)
    )
    yield "cross points dependency", dep.is_zero(), f"got {dep}"
    yield "cross points collinear", collinear_points(a2, b2, c2), "not collinear"
    distinct = a2 != b2 and b2 != c2 and a2 != c2
    yield "cross points distinct", distinct, "coincident points"


def run_all() -> Iterator[tuple[str, bool, str]]:
    """All built-in checks as (name, passed, detail) triples."""
    yield from _check_complement_table()
    yield from _check_hyperplane_products()
    yield from _check_plane_meet()
    yield from _check_line_line()
    yield from _check_hexagon_collinearity()
