"""Exception types raised across the package."""


class CuspboundError(ValueError):
    """Base class for every error raised by cuspbound."""


class DomainError(CuspboundError):
    """An argument lies outside the domain of a formula."""


class NonpositiveLength(DomainError):
    pass


class NotLoxodromic(CuspboundError):
    pass


class NoIsometricCircle(CuspboundError):
    """The map fixes infinity (c == 0), so it has no isometric circle."""


class NotUnitModulus(DomainError):
    pass


class ZeroTrace(DomainError):
    pass


class BothParabolic(CuspboundError):
    """Neither of beta^n gamma, beta^-n gamma is loxodromic.

    Unreachable for valid inputs; raising it means the underlying
    geometric argument was violated.
    """


class ZeroSlope(DomainError):
    pass


class EmptyInterval(DomainError):
    pass


class BracketFailure(CuspboundError):
    pass


class SlopeTooShort(DomainError):
    pass


class ParseError(CuspboundError):
    pass


class UnsortedSpectrum(CuspboundError):
    pass


class NegativeVolume(DomainError):
    pass
