"""Exact scalar arithmetic: unbounded rationals and prime fields GF(p).

All geometry in this package reduces to sign-exact scalar arithmetic, so
floating point is never used.  Rationals are backed by
:class:`fractions.Fraction` (already canonical: lowest terms, positive
denominator); prime-field values are residues in ``[0, p)``.

Elements of different fields never combine: mixing them raises
:class:`~exalg.errors.FieldMismatch` instead of coercing.

Field elements are immutable and all operations are pure, so values may be
shared freely between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import (
    DivisionByZero,
    FieldMismatch,
    MalformedScalar,
    NonPrimeModulus,
    ZeroDenominator,
)

_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any sane modulus here."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """The rationals, or the integers mod a prime.

    Use the module-level ``RATIONALS`` singleton or the :func:`gf` factory
    rather than calling the constructor directly.
    """

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: str, modulus: int | None = None):
        if kind == "rationals":
            if modulus is not None:
                raise NonPrimeModulus("the rationals take no modulus")
        elif kind == "prime":
            if modulus is None or modulus < 2 or not _is_prime(modulus):
                raise NonPrimeModulus(f"modulus {modulus!r} is not prime")
        else:
            raise MalformedScalar(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("Field is immutable")

    # -- basic protocol ----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return f"Field({str(self)!r})"

    def __str__(self):
        return "q" if self.kind == "rationals" else f"gf:{self.modulus}"

    # -- element construction ----------------------------------------------

    def __call__(self, value: Union[int, Fraction, "FieldElement"]) -> "FieldElement":
        """Coerce an int or Fraction into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"cannot move element between {value.field} and {self}")
            return value
        if self.kind == "rationals":
            return FieldElement(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise ZeroDenominator(f"denominator {value.denominator} vanishes mod {self.modulus}")
            num = value.numerator % self.modulus
            den = value.denominator % self.modulus
            return FieldElement(self, num * pow(den, -1, self.modulus) % self.modulus)
        return FieldElement(self, value % self.modulus)

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    def characteristic(self) -> int:
        return 0 if self.kind == "rationals" else self.modulus

    def parse(self, text: str) -> "FieldElement":
        """Parse ``-?digits`` or ``-?digits/digits`` into a canonical element."""
        m = _SCALAR_RE.match(text.strip())
        if not m:
            raise MalformedScalar(f"bad scalar {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return self(num)
        den = int(m.group(2))
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {text!r}")
        return self(Fraction(num, den))


RATIONALS = Field("rationals")


def gf(p: int) -> Field:
    """The prime field GF(p)."""
    return Field("prime", p)


def field_from_string(text: str) -> Field:
    """Resolve the field selector strings ``q`` and ``gf:<p>``."""
    text = text.strip().lower()
    if text == "q":
        return RATIONALS
    if text.startswith("gf:"):
        body = text[3:]
        if not body.isdigit():
            raise MalformedScalar(f"bad field selector {text!r}")
        return gf(int(body))
    raise MalformedScalar(f"bad field selector {text!r}")


class FieldElement:
    """An exact scalar tagged with its field.

    Supports ``+ - * /``, unary ``-``, equality, and hashing.  Construction
    goes through :class:`Field` so values are always canonical.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field(self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return self.field(-self.value)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse; raises on zero."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.field.kind == "rationals":
            return self.field(1 / self.value)
        return self.field(pow(self.value, -1, self.field.modulus))

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    # -- protocol ------------------------------------------------------------

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"<{self.value} in {self.field}>"


# Operation aliases matching the scalar layer's public contract.

def parse_scalar(text: str, field: Field) -> FieldElement:
    """Parse scalar text under the published grammar."""
    return field.parse(text)


def invert(a: FieldElement) -> FieldElement:
    """Multiplicative inverse of a nonzero element."""
    return a.inverse()


def characteristic(field: Field) -> int:
    """0 for the rationals, p for GF(p)."""
    return field.characteristic()
