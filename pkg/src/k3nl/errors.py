"""Exception types raised by k3nl."""


class K3NLError(Exception):
    """Base class for all domain errors."""


class InvalidDivisor(K3NLError, ValueError):
    """A pair (d, n) does not label a nonempty NL divisor.

    ``reason`` is ``"odd_n"`` or ``"nonpositive_delta"``.
    """

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason


class InvalidSource(InvalidDivisor):
    """The source class of a curve-class locus is degenerate."""


class GenusMismatch(K3NLError, ValueError):
    pass


class DomainError(K3NLError, ValueError):
    pass


class UnsupportedGenus(K3NLError, ValueError):
    pass


class NonIntegralRho(K3NLError, ArithmeticError):
    """The rank formula produced a non-integer; ``value`` holds the Fraction."""

    def __init__(self, g, value):
        super().__init__(f"rank formula is non-integral at g={g}: {value}")
        self.g = g
        self.value = value
