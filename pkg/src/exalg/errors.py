"""Exception hierarchy.

Every failure mode raised by the library derives from :class:`ExalgError`,
so callers can catch one type at an API boundary (the CLI does exactly
that).  The leaf classes are deliberately fine-grained: exact geometry code
tends to branch on *why* an operation was refused.
"""


class ExalgError(ValueError):
    """Base class for all errors raised by this package."""


# --- scalars -------------------------------------------------------------

class MalformedScalar(ExalgError):
    """Scalar text does not match ``-?digits`` or ``-?digits/digits``."""


class ZeroDenominator(ExalgError):
    """Scalar text has a denominator equal to zero (possibly mod p)."""


class NonPrimeModulus(ExalgError):
    """Prime-field modulus failed the primality check."""


class DivisionByZero(ExalgError):
    """Multiplicative inverse of zero requested."""


class FieldMismatch(ExalgError):
    """Operands belong to different fields; silent coercion is refused."""


# --- exterior algebra ----------------------------------------------------

class MalformedExpression(ExalgError):
    """Multivector / vector / matrix text failed to parse."""


class DimMismatch(ExalgError):
    """Operands live in spaces of different dimension."""


class DualMismatch(ExalgError):
    """Primal and dual elements were mixed in one product."""


class NotSquare(ExalgError):
    """Square matrix required."""


class SingularMatrix(ExalgError):
    """Invertible matrix required."""


class GradeMismatch(ExalgError):
    """Homogeneous element of a specific grade required."""


class TooManyColumns(ExalgError):
    """Matrix has more columns than the ambient dimension allows."""


class NotABlade(ExalgError):
    """Element is not expressible as an exterior product of vectors."""


class ZeroInput(ExalgError):
    """The zero element carries no subspace information here."""


class NotComplementary(ExalgError):
    """The given subspaces do not decompose the ambient space."""


# --- duality -------------------------------------------------------------

class AlreadyDual(ExalgError):
    """Primal-side operand required."""


class NotDual(ExalgError):
    """Dual-side operand required."""


class WrongGrade(ExalgError):
    """Element has the wrong grade for this extraction."""


class TooFewVectors(ExalgError):
    """Factor lists must span at least the whole space."""


class DependentFactors(ExalgError):
    """A factor list is linearly dependent where independence is required."""


class DependentInput(ExalgError):
    """Input vectors are linearly dependent."""


class LengthMismatch(ExalgError):
    """Paired lists must have equal length."""


# --- affine geometry -----------------------------------------------------

class ZeroWeight(ExalgError):
    """Total weight of a barycentric combination is zero."""


class NotProportional(ExalgError):
    """Vector ratio requested for vectors that are not parallel."""


class ZeroDenominatorVector(ExalgError):
    """Vector ratio requested with zero denominator vector."""


class PreconditionViolated(ExalgError):
    """A classical-theorem hypothesis failed; the message names the clause."""


class DegenerateLine(ExalgError):
    """A line was specified by two equal points."""


# --- projective geometry -------------------------------------------------

class ZeroVector(ExalgError):
    """The zero vector represents no point or direction."""


class NotAFrame(ExalgError):
    """Points are not in general position."""


class PointInCenter(ExalgError):
    """Central projection is undefined on the center itself."""


class GeneratorExhausted(ExalgError):
    """A configuration generator hit its retry cap."""


# --- scalar products -----------------------------------------------------

class NotSymmetric(ExalgError):
    """Gram matrices must be symmetric."""


class Degenerate(ExalgError):
    """Gram matrices must be invertible."""


class BadSign(ExalgError):
    """Standard-form signature entries must be +1 or -1."""


class WrongDimension(ExalgError):
    """Operation is only defined in a specific ambient dimension."""


class StarNotBlade(ExalgError):
    """Internal consistency failure: the star of a blade must be a blade."""
