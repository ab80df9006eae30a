"""Rank-two even lattices containing a quasi-polarization.

A surface of genus ``g`` carries a class ``L`` with ``L.L = 2g - 2``.  A second
class ``beta`` with ``L.beta = d`` and ``beta.beta = n`` spans the lattice with
Gram matrix ``[[2g-2, d], [d, n]]``.  Everything here is exact integer
arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import GenusMismatch, InvalidDivisor

__all__ = [
    "GenusContext",
    "NLPair",
    "CanonicalDivisor",
    "discriminant",
    "is_valid_divisor",
    "canonicalize",
    "equivalent",
    "represent",
    "represent_bruteforce",
    "fold",
]


@dataclass(frozen=True)
class GenusContext:
    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or isinstance(self.g, bool):
            raise TypeError(f"genus must be an int, got {type(self.g).__name__}")
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")

    @property
    def ell_sq(self) -> int:
        return 2 * self.g - 2

    @property
    def evenmod(self) -> int:
        return 4 * self.g - 4


def _ctx(g) -> GenusContext:
    return g if isinstance(g, GenusContext) else GenusContext(g)


@dataclass(frozen=True)
class NLPair:
    """The invariants ``(d, n)`` of a class ``beta`` on a genus-``g`` surface.

    Odd ``n`` is representable so that validity can be asked about it.
    """

    ctx: GenusContext
    d: int
    n: int

    @classmethod
    def of(cls, g, d: int, n: int) -> "NLPair":
        return cls(_ctx(g), d, n)

    @property
    def g(self) -> int:
        return self.ctx.g

    def label(self) -> str:
        return f"D_{{{self.d},{self.n}}}"


@dataclass(frozen=True)
class CanonicalDivisor:
    """Normal form ``(g, delta, r)`` of an NL divisor label.

    ``r`` is the residue of ``d`` modulo ``2g - 2`` folded into ``[0, g - 1]``.
    The standard representative of the divisor is ``(r, (r*r - delta) / (2g - 2))``.
    """

    ctx: GenusContext
    delta: int
    r: int

    def __post_init__(self):
        g = self.ctx.g
        if self.delta <= 0:
            raise InvalidDivisor(f"delta must be positive, got {self.delta}", "nonpositive_delta")
        if not 0 <= self.r <= g - 1:
            raise ValueError(f"residue {self.r} outside [0, {g - 1}]")
        if (self.r * self.r - self.delta) % self.ctx.evenmod:
            raise InvalidDivisor(
                f"r^2 = {self.r * self.r} is not congruent to delta = {self.delta} mod {self.ctx.evenmod}",
                "odd_n",
            )

    @property
    def g(self) -> int:
        return self.ctx.g

    @property
    def d(self) -> int:
        return self.r

    @property
    def n(self) -> int:
        return (self.r * self.r - self.delta) // self.ctx.ell_sq

    def standard_pair(self) -> NLPair:
        return NLPair(self.ctx, self.d, self.n)

    def label(self) -> str:
        return f"D_{{{self.d},{self.n}}}"

    def sort_key(self) -> tuple[int, int]:
        return (self.delta, self.r)

    def __str__(self) -> str:
        return self.label()


def fold(d: int, ell_sq: int) -> int:
    """Residue of ``d`` mod ``ell_sq`` mapped to ``min(s, ell_sq - s)``."""
    s = d % ell_sq
    return min(s, ell_sq - s)


def discriminant(p: NLPair) -> int:
    return p.d * p.d - p.ctx.ell_sq * p.n


def is_valid_divisor(p: NLPair) -> bool:
    return p.n % 2 == 0 and discriminant(p) > 0


def canonicalize(p: NLPair) -> CanonicalDivisor:
    if p.n % 2:
        raise InvalidDivisor(f"{p.label()} at g={p.g}: n = {p.n} is odd", "odd_n")
    delta = discriminant(p)
    if delta <= 0:
        raise InvalidDivisor(
            f"{p.label()} at g={p.g}: discriminant {delta} is not positive", "nonpositive_delta"
        )
    return CanonicalDivisor(p.ctx, delta, fold(p.d, p.ctx.ell_sq))


def equivalent(a: NLPair, b: NLPair) -> bool:
    if a.ctx != b.ctx:
        raise GenusMismatch(f"genus {a.g} vs {b.g}")
    return canonicalize(a) == canonicalize(b)


def _check_same_genus(host: CanonicalDivisor, target: NLPair):
    if host.ctx != target.ctx:
        raise GenusMismatch(f"host genus {host.g} vs target genus {target.g}")


def _solution_order(sol: tuple[int, int]) -> tuple[int, int, int]:
    x, y = sol
    return (abs(y), y, x)


def represent(host: CanonicalDivisor, target: NLPair, bound: int) -> list[tuple[int, int]]:
    """Vectors ``v = x L + y beta'`` of ``host`` with ``v.L = d`` and ``v.v = n``.

    ``beta'`` is the standard representative of ``host``.  Only solutions with
    ``|x|, |y| <= bound`` are returned, ordered by ``(|y|, y, x)``.

    Since ``disc(target) = y^2 * disc(host)`` for any solution, ``y`` is fixed
    up to sign; ``x`` then follows from the linear equation.
    """
    _check_same_genus(host, target)
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    ell_sq = host.ctx.ell_sq
    d0, n0 = host.d, host.n
    d, n = target.d, target.n
    delta_t = discriminant(target)

    if delta_t < 0 or delta_t % host.delta:
        return []
    ratio = delta_t // host.delta
    k = isqrt(ratio)
    if k * k != ratio or k > bound:
        return []

    found = []
    for y in sorted({k, -k}):
        num = d - y * d0
        if num % ell_sq:
            continue
        x = num // ell_sq
        if abs(x) > bound:
            continue
        if x * x * ell_sq + 2 * x * y * d0 + y * y * n0 == n:
            found.append((x, y))
    return sorted(found, key=_solution_order)


def represent_bruteforce(host: CanonicalDivisor, target: NLPair, bound: int) -> list[tuple[int, int]]:
    """Reference version of :func:`represent` scanning the full box."""
    _check_same_genus(host, target)
    ell_sq = host.ctx.ell_sq
    d0, n0 = host.d, host.n
    found = []
    for y in range(-bound, bound + 1):
        for x in range(-bound, bound + 1):
            if x * ell_sq + y * d0 != target.d:
                continue
            if x * x * ell_sq + 2 * x * y * d0 + y * y * n0 == target.n:
                found.append((x, y))
    return sorted(found, key=_solution_order)
