"""The annihilator-blade map, regressive products, and dual-space plumbing.

The annihilator-blade map sends each basis blade to the complementary dual
blade with a permutation sign:

    e_{i1..in}  |->  sign(i1..id) * E_{i(n+1)..id}

where (i1..id) runs the chosen indices first, the complementary ones after,
each part increasing, read as a one-line permutation of 1..d.  It is a
grade-flipping linear bijection, fixed once and for all by the labeled
working basis; relabeling the basis changes it only by a sign.

Pulling the wedge back through this map yields the regressive product

    a v b  =  Hinv(H(a) ^ H(b)),

the algebraic carrier of subspace intersection, with unit element e{1..d}.
A coordinate-free evaluation of the same product from vector factors (two
bracket-weighted sums, one over each factor list) is provided alongside and
agrees exactly when built over the same working basis.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import (
    AlreadyDual,
    DependentFactors,
    DependentInput,
    DimMismatch,
    LengthMismatch,
    NotDual,
    SingularMatrix,
    TooFewVectors,
    WrongGrade,
)
from .exterior import wedge_vectors
from .fields import FieldElement
from .matrices import Matrix
from .multivector import Multivector, Vector, perm_parity


def annihilator_blade(m: Multivector) -> Multivector:
    """Map a primal element to its annihilator blade on the dual side."""
    if m.dual:
        raise AlreadyDual("operand is already a dual element")
    return _complement(m, to_dual=True)


def annihilator_blade_inv(dm: Multivector) -> Multivector:
    """Two-sided inverse of :func:`annihilator_blade`."""
    if not dm.dual:
        raise NotDual("operand is not a dual element")
    return _complement(dm, to_dual=False)


def _complement(m: Multivector, to_dual: bool) -> Multivector:
    d = m.dim
    full = range(1, d + 1)
    terms = {}
    for idx, coeff in m.terms.items():
        comp = tuple(i for i in full if i not in idx)
        # Primal indices first, dual indices after, in both directions.
        seq = idx + comp if to_dual else comp + idx
        if perm_parity(seq) < 0:
            coeff = -coeff
        terms[comp] = coeff
    return Multivector(m.field, d, terms, dual=to_dual)


def regressive(a: Multivector, b: Multivector) -> Multivector:
    """The regressive product, the wedge pulled back through the annihilator map."""
    if a.dual or b.dual:
        raise AlreadyDual("regressive product is defined on primal elements")
    if a.dim != b.dim:
        raise DimMismatch("operands of different dimension")
    return annihilator_blade_inv(annihilator_blade(a).wedge(annihilator_blade(b)))


def bracket(m: Multivector) -> FieldElement:
    """Coefficient of e{1..d} in a grade-d element (zero allowed)."""
    if not m.is_zero() and m.grade() != m.dim:
        raise WrongGrade(f"bracket needs grade {m.dim}, got {m.grade()}")
    return m.coefficient(tuple(range(1, m.dim + 1)))


def regressive_from_factors(
    us: Sequence[Vector], vs: Sequence[Vector], side: str = "u"
) -> Multivector:
    """Regressive product of two blades given by vector factors.

    Evaluates the bracket-weighted sum adapted to one factor list:

      side="u":  sum over I in C({1..l}, n) of sign(comp(I), I) * [u_comp(I) ^ b] * u_I
      side="v":  sum over I in C({1..m}, n) of sign(I, comp(I)) * [a ^ v_comp(I)] * v_I

    with a = wedge(us), b = wedge(vs), n = l + m - d.  Both sides equal
    regressive(a, b) over the same working basis; the v-side exists to
    cross-check signs and is exercised by the tests.

    Returns 0 when the two spans do not fill the space.
    """
    if side not in ("u", "v"):
        raise ValueError(f"side must be 'u' or 'v', not {side!r}")
    if not us or not vs:
        raise TooFewVectors("both factor lists must be nonempty")
    field, d = us[0].field, us[0].dim
    alpha = wedge_vectors(us)
    beta = wedge_vectors(vs)
    if alpha.is_zero() or beta.is_zero():
        raise DependentFactors("factor lists must each be independent")
    l, m = len(us), len(vs)
    if l + m < d:
        raise TooFewVectors(f"need at least {d} factors in total, got {l + m}")
    n = l + m - d
    out = Multivector.zero(field, d)
    if side == "u":
        base, fixed, positions = us, beta, range(1, l + 1)
    else:
        base, fixed, positions = vs, alpha, range(1, m + 1)
    for chosen in combinations(positions, n):
        comp = tuple(p for p in positions if p not in chosen)
        if side == "u":
            seq = comp + chosen
            partner = wedge_vectors([base[p - 1] for p in comp]) if comp else Multivector.scalar(field, d, 1)
            coeff = bracket(partner.wedge(fixed))
        else:
            seq = chosen + comp
            partner = wedge_vectors([base[p - 1] for p in comp]) if comp else Multivector.scalar(field, d, 1)
            coeff = bracket(fixed.wedge(partner))
        if coeff.is_zero():
            continue
        if perm_parity(seq) < 0:
            coeff = -coeff
        piece = Multivector.scalar(field, d, coeff)
        if chosen:
            piece = piece.wedge(wedge_vectors([base[p - 1] for p in chosen]))
        out = out + piece
    return out


def annihilator_subspace(w: Sequence[Vector]) -> list[Multivector]:
    """Basis of the annihilator of span(w): d - |w| independent functionals.

    Each returned element is a grade-1 dual multivector vanishing on every
    generator.
    """
    if not w:
        raise DependentInput("empty generator list")
    rows = Matrix(w[0].field, [list(v.coords) for v in w])
    if rows.rank() != len(w):
        raise DependentInput("generators are dependent")
    return [Multivector.from_vector(k, dual=True) for k in rows.kernel_basis()]


def dual_map(m: Matrix) -> Matrix:
    """Dual-basis coordinates of the dual of a map: the transpose."""
    return m.transpose()


def contragredient(m: Matrix) -> Matrix:
    """Inverse transpose; transports a dual basis along a change of basis."""
    if not m.is_square():
        raise SingularMatrix("contragredient needs an invertible square matrix")
    return m.inverse().transpose()


def eval_dual_blade(phis: Sequence[Multivector], vs: Sequence[Vector]) -> FieldElement:
    """Evaluation pairing det[phi_i(v_j)] of dual vectors against vectors."""
    if len(phis) != len(vs):
        raise LengthMismatch(f"{len(phis)} functionals against {len(vs)} vectors")
    if not phis:
        raise LengthMismatch("empty evaluation")
    field = vs[0].field
    rows = []
    for phi in phis:
        if not phi.dual:
            raise NotDual("functionals must be dual elements")
        if not phi.is_zero() and phi.grade() != 1:
            raise WrongGrade("functionals must have grade 1")
        coords = phi.as_vector()
        rows.append([sum((coords[k] * v[k] for k in range(v.dim)), field.zero) for v in vs])
    return Matrix(field, rows).det()


def jacobi_identity_check(m: Matrix, n: int) -> tuple[FieldElement, FieldElement]:
    """Both sides of the determinant identity relating a matrix and its inverse.

    Returns (det of the leading n x n block of M,
             det(M) * det of the trailing (d-n) x (d-n) block of M^-1);
    the two components are equal for every invertible M.
    """
    if not m.is_square():
        raise SingularMatrix("need a square matrix")
    d = m.nrows
    if not 0 <= n <= d:
        raise DimMismatch(f"block size {n} out of range for {d}")
    det_m = m.det()
    if det_m.is_zero():
        raise SingularMatrix("matrix is singular")
    inv = m.inverse()
    lead = (
        m.submatrix(range(n), range(n)).det() if n > 0 else m.field.one
    )
    trail = (
        inv.submatrix(range(n, d), range(n, d)).det() if n < d else m.field.one
    )
    return lead, det_m * trail
