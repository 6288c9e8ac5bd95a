"""Exception hierarchy.

Every error raised on purpose by the library derives from HankelError, so
callers (and the CLI) can separate validation failures from bugs.
"""

from __future__ import annotations


class HankelError(Exception):
    """Base class for all library errors."""


class DegreeMismatch(HankelError):
    pass


class ZeroForm(HankelError):
    pass


class NotApolar(HankelError):
    pass


class IrrationalNodes(HankelError):
    """Raised when an exact computation would need irrational linear factors."""


class SingularSystem(HankelError):
    pass


class NotCoprime(HankelError):
    pass


class SearchExhausted(HankelError):
    pass


class DimensionMismatch(HankelError):
    pass


class OddDegree(HankelError):
    pass


class EmptyKernel(HankelError):
    pass


class CenterOnThirdSecant(HankelError):
    pass


class ProperDivisor(HankelError):
    pass


class VerificationFailed(HankelError):
    """A certificate check failed. This indicates a bug, never bad input."""


class ZeroCoefficient(HankelError):
    pass


class DegreeTooSmall(HankelError):
    pass


class CenterOnSecant(HankelError):
    def __init__(self, k: int):
        super().__init__(f"center lies on the secant variety of order {k} (cbrank = {k} <= 3)")
        self.k = k


class GenericTypeRequired(HankelError):
    pass


class OpenInterval(HankelError):
    pass


class NotAlmostReal(HankelError):
    pass


class ParseError(HankelError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
