"""Closed-form rank of the span of NL divisors in the rational Picard group.

    rho_g = (31g + 24)/24 - alpha_g/4 - beta_g/6
            - sum_{k=0}^{g-1} {k^2 / (4g - 4)}
            - #{0 <= k <= g-1 : (4g - 4) | k^2}

with ``alpha_g`` and ``beta_g`` built from Jacobi symbols.  All arithmetic is
exact (``fractions.Fraction``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NonIntegralRho

__all__ = [
    "RhoBreakdown",
    "kronecker",
    "alpha",
    "beta",
    "frac_sum",
    "square_count",
    "rho",
    "betti2",
]


def kronecker(a: int, b: int) -> int:
    """Jacobi symbol ``(a/b)`` for odd positive ``b``.

    Binary algorithm using quadratic reciprocity and the supplementary law
    for 2.
    """
    if b <= 0 or b % 2 == 0:
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, got {b}")
    a %= b
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                sign = -sign
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            sign = -sign
        a %= b
    return sign if b == 1 else 0


def _check_genus(g: int):
    if g < 2:
        raise DomainError(f"genus must be >= 2, got {g}")


def alpha(g: int) -> int:
    _check_genus(g)
    if g % 2 == 0:
        return 0
    return kronecker(2 * g - 2, 2 * g - 3)


def beta(g: int) -> int:
    _check_genus(g)
    main = kronecker(g - 1, 4 * g - 5)
    if g % 3 == 1:
        return main - 1
    return main + kronecker(g - 1, 3)


def frac_sum(g: int) -> Fraction:
    _check_genus(g)
    m = 4 * g - 4
    return Fraction(sum(k * k % m for k in range(g)), m)


def square_count(g: int) -> int:
    _check_genus(g)
    m = 4 * g - 4
    return sum(1 for k in range(g) if k * k % m == 0)


@dataclass(frozen=True)
class RhoBreakdown:
    g: int
    leading: Fraction
    alpha: int
    beta: int
    frac_sum: Fraction
    square_count: int
    rho: int

    def total(self) -> Fraction:
        return (
            self.leading
            - Fraction(self.alpha, 4)
            - Fraction(self.beta, 6)
            - self.frac_sum
            - self.square_count
        )

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "leading": str(self.leading),
            "alpha": self.alpha,
            "beta": self.beta,
            "frac_sum": str(self.frac_sum),
            "square_count": self.square_count,
            "rho": self.rho,
        }


def rho(g: int) -> RhoBreakdown:
    _check_genus(g)
    leading = Fraction(31 * g + 24, 24)
    a, b = alpha(g), beta(g)
    fs, sc = frac_sum(g), square_count(g)
    value = leading - Fraction(a, 4) - Fraction(b, 6) - fs - sc
    if value.denominator != 1:
        raise NonIntegralRho(g, value)
    return RhoBreakdown(g, leading, a, b, fs, sc, int(value))


def betti2(g: int) -> int:
    """Second Betti number of the arithmetic group, identified with ``rho(g)``."""
    return rho(g).rho
