"""Exception hierarchy.

Every mathematical precondition failure raises a subclass of
:class:`TorusError`, so callers (and the CLI) can catch one type and
report the class name as the violated precondition.
"""


class TorusError(ValueError):
    """Base class for precondition failures."""


class NonPrimeP(TorusError):
    pass


class NotIrreducible(TorusError):
    pass


class NotPrimitive(TorusError):
    pass


class DivisionByZero(TorusError, ZeroDivisionError):
    pass


class LogOfZero(TorusError):
    pass


class NotADivisor(TorusError):
    pass


class ZeroForm(TorusError):
    pass


class NotProperTower(TorusError):
    pass


class AllZeroSeed(TorusError):
    pass


class NoZeroRun(TorusError):
    pass


class BadFactorization(TorusError):
    pass


class NotSubfieldRegime(TorusError):
    pass


class OddCharacteristic(TorusError):
    pass


class OutOfBounds(TorusError):
    pass


class WrongSize(TorusError):
    pass


class NoValidShift(TorusError):
    pass


class DimensionExceeded(TorusError):
    pass


class NotABasis(TorusError):
    pass


class AllZeroPattern(TorusError):
    pass


class NotCoprime(TorusError):
    pass


class BadProduct(TorusError):
    pass


class TheoremViolation(AssertionError):
    """An algebraic prediction disagreed with a direct computation."""
