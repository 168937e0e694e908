"""Exception types raised by the calculator.

Every domain failure derives from :class:`DomainError`, so callers (the CLI in
particular) can separate bad input from programming errors.
"""


class DomainError(ValueError):
    """Base class for all mathematical/domain failures."""


# numeric
class MixedDiscriminant(DomainError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


# moebius
class NoRealFixedPoint(DomainError):
    pass


class NotAffine(DomainError):
    pass


# piecewise
class InvalidMap(DomainError):
    """A piecewise map violates one of its structural invariants."""

    def __init__(self, message, breakpoint=None):
        super().__init__(message)
        self.breakpoint = breakpoint


class Discontinuous(InvalidMap):
    pass


class NotIncreasing(InvalidMap):
    pass


class GermNotAffine(InvalidMap):
    pass


class GluingMismatch(DomainError):
    pass


# group
class WordSyntaxError(DomainError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class MarkerViolation(DomainError):
    pass


class NormalizationOverflow(RuntimeError):
    """Rewrite budget exhausted; this indicates a bug rather than bad input."""


class NonUnitGermSlope(DomainError):
    pass


# hstep
class BadSign(DomainError):
    pass


class GermMismatch(DomainError):
    pass


class NotInPZ(DomainError):
    pass


class NotAUnit(DomainError):
    pass
