"""Typed exceptions shared across the package."""


class DirAlgebraError(Exception):
    """Base class for all errors raised by this package."""


class NotDivisible(DirAlgebraError):
    """Exact polynomial division by a symbol failed (some term lacks it)."""


class MissingSymbol(DirAlgebraError):
    """A numeric evaluation did not assign a value to every symbol."""


class NotADivisor(DirAlgebraError):
    """An integer argument was required to divide another and does not."""


class NonUnitLeadingCoefficient(DirAlgebraError):
    """Inversion needs a nonzero rational constant at index 1."""


class LeadingCoefficientNotZero(DirAlgebraError):
    """The operation requires the coefficient at index 1 to be 0."""


class LeadingCoefficientNotOne(DirAlgebraError):
    """The operation requires the coefficient at index 1 to be 1."""


class ConstantTermNotOne(DirAlgebraError):
    """The operation requires an ordinary series with constant term 1."""


class ConstantTermNotZero(DirAlgebraError):
    """The operation requires an ordinary series with constant term 0."""


class NonUnitConstantTerm(DirAlgebraError):
    """Ordinary-series inversion needs a nonzero rational constant term."""


class TruncationTooSmall(DirAlgebraError):
    """An input series is not long enough for the requested computation."""


class ShapeMismatch(DirAlgebraError):
    """Matrix index ranges are incompatible for the requested product."""


class KindMismatch(DirAlgebraError):
    """The matrix operation is only defined for a specific matrix kind."""


class SingularDiagonal(DirAlgebraError):
    """Matrix inversion needs nonzero rational constants on the diagonal."""


class PolynomialSyntaxError(DirAlgebraError):
    """Malformed polynomial text; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ExprSyntaxError(DirAlgebraError):
    """Malformed CLI expression; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownFunction(DirAlgebraError):
    """A CLI expression used a name that is not a builtin or function."""


class ArityMismatch(DirAlgebraError):
    """A CLI expression called a function with the wrong argument count."""


class ExprTypeError(DirAlgebraError):
    """A CLI expression passed a value of the wrong kind to a function."""
