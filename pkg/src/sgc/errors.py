"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class SgcError(Exception):
    """Base class for all library errors."""


# field layer
class FieldError(SgcError):
    pass


class NotPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class NonPrimitiveModulus(FieldError):
    pass


class UnregisteredField(FieldError):
    pass


class CtxMismatch(FieldError):
    pass


class ParseError(SgcError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


# polynomial layer
class RingMismatch(SgcError):
    pass


class DivisionByZeroPoly(SgcError, ZeroDivisionError):
    pass


class BothZero(SgcError):
    pass


class NotMonic(SgcError):
    pass


class ZeroConstantTerm(SgcError):
    pass


class ZeroInput(SgcError):
    pass


class ZeroPolynomial(SgcError):
    pass


class NonCommutingModuli(SgcError):
    pass


class DimensionMismatch(SgcError):
    pass


# codes
class BudgetExceeded(SgcError):
    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        super().__init__(f"{message} (bounds so far: {lower} <= d <= {upper})")
        self.lower = lower
        self.upper = upper


class DegreeOutOfRange(SgcError):
    pass


class NotTwoSidedDivisor(SgcError):
    pass


class LexdegOutOfRange(SgcError):
    pass


# bounds
class ExtensionTooSmall(SgcError):
    pass


class IndexOutOfRange(SgcError):
    pass


class MvecAllZero(SgcError):
    pass


class BadParameters(SgcError):
    pass
