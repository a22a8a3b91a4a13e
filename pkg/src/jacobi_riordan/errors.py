"""Error vocabulary shared by every module.

The CLI echoes the class name of any of these on a domain failure.
"""


class RiordanError(Exception):
    """Base class for all domain errors raised by the package."""


class DomainError(RiordanError, ValueError):
    """A series operation was applied outside its domain."""


class NonzeroInnerConstant(DomainError):
    """Composition f(g) requested with g(0) != 0."""


class BadLinearTerm(DomainError):
    """Reversion requested for a series whose linear term is zero or m-dependent."""


class InvalidPair(RiordanError, ValueError):
    """(d, h) does not define an exponential Riordan array."""


class NotTridiagonal(RiordanError):
    pass


class DegenerateHankel(RiordanError):
    pass


class UnknownName(RiordanError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class SingularAtOrigin(RiordanError, ValueError):
    pass


class OrderTooLow(RiordanError, ValueError):
    pass


class NoSolution(RiordanError):
    pass


class ZeroNormalizer(RiordanError, ValueError):
    pass
