"""Graded exterior algebra elements over a fixed ordered basis.

A :class:`Multivector` is a finite map from strictly increasing multi-indices
(1-based tuples drawn from ``{1, ..., d}``) to nonzero scalars.  The same
container represents elements of the dual exterior algebra via a ``dual``
flag; primal and dual elements never mix in one product.

Products use the usual shuffle sign, computed by merge-counting
transpositions.  Canonical term order is grade-major, then lexicographic,
which makes printing deterministic and equality exact.

The text grammar (round-trippable) is a sum of terms ``<scalar>*e{i,j,...}``
with ``E`` in place of ``e`` on the dual side, the empty index set written
``e{}``, and ``0`` for the zero element.

Everything here is immutable and pure.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DimMismatch,
    DualMismatch,
    FieldMismatch,
    GradeMismatch,
    MalformedExpression,
)
from .fields import Field, FieldElement

MAX_DIM = 16  # 2^d term explosion guard; nothing here needs more

Index = tuple[int, ...]


def _check_dim(dim: int) -> None:
    if not 1 <= dim <= MAX_DIM:
        raise DimMismatch(f"ambient dimension must be in [1, {MAX_DIM}], got {dim}")


def merge_indices(a: Index, b: Index) -> tuple[int, Index] | None:
    """Merge two strictly increasing index tuples.

    Returns ``(sign, merged)`` where sign is +-1 from the transposition
    count, or ``None`` if the tuples share an index (the product vanishes).
    """
    i, j, swaps = 0, 0, 0
    out = []
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            swaps += len(a) - i
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return (-1 if swaps % 2 else 1, tuple(out))


def perm_parity(seq: Sequence[int]) -> int:
    """+1 or -1 according to the inversion count of ``seq``."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def sort_with_sign(indices: Sequence[int]) -> tuple[int, Index] | None:
    """Sort an arbitrary index tuple, tracking the permutation sign.

    Returns ``None`` when an index repeats.
    """
    if len(set(indices)) != len(indices):
        return None
    return perm_parity(indices), tuple(sorted(indices))


class Vector:
    """A coordinate d-tuple over one field."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords: Iterable):
        coords = tuple(field(c) for c in coords)
        _check_dim(len(coords))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check_compatible(self, other: "Vector") -> None:
        if not isinstance(other, Vector):
            raise TypeError("expected a Vector")
        if self.field != other.field:
            raise FieldMismatch("vectors over different fields")
        if self.dim != other.dim:
            raise DimMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        self._check_compatible(other)
        return Vector(self.field, (a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check_compatible(other)
        return Vector(self.field, (a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(self.field, (-a for a in self.coords))

    def scale(self, a) -> "Vector":
        a = self.field(a)
        return Vector(self.field, (a * c for c in self.coords))

    def __rmul__(self, a):
        return self.scale(a)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, Vector)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __getitem__(self, i: int) -> FieldElement:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"Vector({self})"

    @classmethod
    def basis(cls, field: Field, dim: int, i: int) -> "Vector":
        """The i-th standard basis vector (1-based)."""
        return cls(field, [field(1 if j == i else 0) for j in range(1, dim + 1)])

    @classmethod
    def zero(cls, field: Field, dim: int) -> "Vector":
        return cls(field, [field(0)] * dim)

    @classmethod
    def parse(cls, text: str, field: Field) -> "Vector":
        """Parse the point/vector grammar ``[a,b,...]``."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise MalformedExpression(f"bad vector {text!r}")
        body = text[1:-1].strip()
        if not body:
            raise MalformedExpression("empty vector")
        return cls(field, [field.parse(part) for part in body.split(",")])


_TERM_RE = re.compile(r"^([^*]+)\*(e|E)\{([0-9,]*)\}$")


class Multivector:
    """An element of the exterior algebra (or its dual, when ``dual`` is set)."""

    __slots__ = ("field", "dim", "dual", "terms")

    def __init__(self, field: Field, dim: int, terms: Mapping[Index, FieldElement] | Iterable = (), dual: bool = False):
        _check_dim(dim)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Index, FieldElement] = {}
        for idx, coeff in items:
            idx = tuple(idx)
            if any(not 1 <= i <= dim for i in idx):
                raise DimMismatch(f"index {idx} out of range for dimension {dim}")
            if list(idx) != sorted(set(idx)):
                raise MalformedExpression(f"index {idx} is not strictly increasing")
            coeff = field(coeff)
            if not coeff.is_zero():
                prev = clean.get(idx)
                coeff = coeff if prev is None else prev + coeff
                if coeff.is_zero():
                    del clean[idx]
                else:
                    clean[idx] = coeff
        ordered = dict(sorted(clean.items(), key=lambda kv: (len(kv[0]), kv[0])))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "dual", bool(dual))
        object.__setattr__(self, "terms", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, dim: int, dual: bool = False) -> "Multivector":
        return cls(field, dim, {}, dual)

    @classmethod
    def scalar(cls, field: Field, dim: int, a, dual: bool = False) -> "Multivector":
        return cls(field, dim, {(): field(a)}, dual)

    @classmethod
    def basis_blade(cls, field: Field, dim: int, indices: Iterable[int], coeff=1, dual: bool = False) -> "Multivector":
        return cls(field, dim, {tuple(indices): field(coeff)}, dual)

    @classmethod
    def from_vector(cls, v: Vector, dual: bool = False) -> "Multivector":
        return cls(v.field, v.dim, {(i + 1,): c for i, c in enumerate(v.coords) if not c.is_zero()}, dual)

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices: Iterable[int]) -> FieldElement:
        return self.terms.get(tuple(indices), self.field.zero)

    def grades(self) -> set[int]:
        return {len(idx) for idx in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def grade(self) -> int | None:
        """The common grade of all terms, or None for the zero element."""
        gs = self.grades()
        if not gs:
            return None
        if len(gs) > 1:
            raise GradeMismatch(f"element is not homogeneous: grades {sorted(gs)}")
        return gs.pop()

    def as_vector(self) -> Vector:
        """Read a homogeneous grade-1 element as a coordinate tuple."""
        if not self.is_zero() and self.grade() != 1:
            raise GradeMismatch("not a grade-1 element")
        coords = [self.coefficient((i,)) for i in range(1, self.dim + 1)]
        return Vector(self.field, coords)

    # -- linear structure ------------------------------------------------------

    def _check_compatible(self, other: "Multivector") -> None:
        if not isinstance(other, Multivector):
            raise TypeError("expected a Multivector")
        if self.field != other.field:
            raise FieldMismatch("multivectors over different fields")
        if self.dim != other.dim:
            raise DimMismatch(f"dimension {self.dim} vs {other.dim}")
        if self.dual != other.dual:
            raise DualMismatch("cannot combine primal and dual elements")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_compatible(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            terms[idx] = terms.get(idx, self.field.zero) + c
        return Multivector(self.field, self.dim, terms, self.dual)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(self.field, self.dim, {i: -c for i, c in self.terms.items()}, self.dual)

    def scale(self, a) -> "Multivector":
        a = self.field(a)
        return Multivector(self.field, self.dim, {i: a * c for i, c in self.terms.items()}, self.dual)

    def __rmul__(self, a):
        return self.scale(a)

    # -- products --------------------------------------------------------------

    def wedge(self, other: "Multivector") -> "Multivector":
        """Progressive (exterior) product, bilinear over basis blades."""
        self._check_compatible(other)
        terms: dict[Index, FieldElement] = {}
        for ia, ca in self.terms.items():
            for ib, cb in other.terms.items():
                merged = merge_indices(ia, ib)
                if merged is None:
                    continue
                sign, idx = merged
                c = ca * cb
                if sign < 0:
                    c = -c
                acc = terms.get(idx)
                terms[idx] = c if acc is None else acc + c
        return Multivector(self.field, self.dim, terms, self.dual)

    __xor__ = wedge

    def grade_project(self, p: int) -> "Multivector":
        """Keep only the grade-p terms."""
        return Multivector(
            self.field, self.dim,
            {i: c for i, c in self.terms.items() if len(i) == p},
            self.dual,
        )

    def graded_parts(self) -> Iterator[tuple[int, "Multivector"]]:
        for p in sorted(self.grades()):
            yield p, self.grade_project(p)

    # -- comparison --------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Multivector)
            and self.field == other.field
            and self.dim == other.dim
            and self.dual == other.dual
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.dual, tuple(self.terms.items())))

    def proportional(self, other: "Multivector") -> FieldElement | None:
        """The scalar c with ``self == c * other``, or None if there is none.

        Both elements zero yields 1; exactly one zero yields None.
        """
        self._check_compatible(other)
        if self.is_zero() and other.is_zero():
            return self.field.one
        if self.is_zero() or other.is_zero():
            return None
        if self.terms.keys() != other.terms.keys():
            return None
        idx = next(iter(self.terms))
        ratio = self.terms[idx] / other.terms[idx]
        for i, c in self.terms.items():
            if c != ratio * other.terms[i]:
                return None
        return ratio

    # -- text form ----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        letter = "E" if self.dual else "e"
        parts = []
        for idx, c in self.terms.items():
            body = f"{c}*{letter}{{{','.join(map(str, idx))}}}"
            if parts and not body.startswith("-"):
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self):
        return f"Multivector({self})"

    @classmethod
    def parse(cls, text: str, field: Field, dim: int) -> "Multivector":
        """Parse the multivector grammar; `E` terms produce a dual element."""
        text = text.strip().replace(" ", "")
        if not text:
            raise MalformedExpression("empty multivector expression")
        if text == "0":
            return cls.zero(field, dim)
        chunks: list[str] = []
        start = 0
        for i, ch in enumerate(text):
            if ch in "+-" and i > start and text[i - 1] not in "*{,+-/":
                chunks.append(text[start:i])
                start = i
        chunks.append(text[start:])
        terms: list[tuple[Index, FieldElement]] = []
        dual: bool | None = None
        for chunk in chunks:
            body = chunk[1:] if chunk[0] in "+-" else chunk
            m = _TERM_RE.match(body)
            if not m:
                raise MalformedExpression(f"bad term {chunk!r}")
            coeff = field.parse(m.group(1))
            if chunk[0] == "-":
                coeff = -coeff
            this_dual = m.group(2) == "E"
            if dual is None:
                dual = this_dual
            elif dual != this_dual:
                raise DualMismatch("expression mixes e{...} and E{...} terms")
            idx_body = m.group(3)
            idx = tuple(int(s) for s in idx_body.split(",")) if idx_body else ()
            if idx and list(idx) != sorted(set(idx)):
                raise MalformedExpression(f"indices must be strictly increasing in {chunk!r}")
            terms.append((idx, coeff))
        return cls(field, dim, terms, bool(dual))

