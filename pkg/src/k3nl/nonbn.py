"""NL divisors whose union is the non-Brill-Noether-general locus.

A genus ``g`` surface fails to be Brill-Noether general exactly when it carries
a class ``M`` with ``M.L = d``, ``M.M = n`` (``n`` even, ``n >= 0``) such that

    (n/2 + 2)(g + n/2 + 1 - d) >= g + 1,
    g + n/2 + 1 - d >= n/2 + 2,
    d^2 - n(2g - 2) > 0.

Rearranged, this is ``sqrt(2(g-1)n) < d <= min(g - 1, (n+2)/2 + g - (2g+2)/(n+4))``.
Both forms are enumerated here so they can be compared.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .lattice import NLPair, canonicalize

__all__ = ["NonBNList", "nonbn_closed_form", "nonbn_system", "is_nonbn"]


@dataclass(frozen=True)
class NonBNList:
    g: int
    pairs: tuple[tuple[int, int], ...]
    method: str

    def canonical(self) -> frozenset:
        return frozenset(canonicalize(NLPair.of(self.g, d, n)) for d, n in self.pairs)

    def labels(self) -> list[str]:
        return [f"D_{{{d},{n}}}" for d, n in self.pairs]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def _check_genus(g):
    if g < 2:
        raise DomainError(f"genus must be >= 2, got {g}")


def _n_ceiling(g: int) -> int:
    return 2 * g


def _closed_form_ok(g: int, d: int, n: int) -> bool:
    if d < 1 or d * d <= n * (2 * g - 2):
        return False
    upper = Fraction(n + 2, 2) + g - Fraction(2 * g + 2, n + 4)
    return d <= g - 1 and d <= upper


def _system_ok(g: int, d: int, n: int) -> bool:
    # each inequality multiplied through by 2 (or 4) to stay in integers
    h_m2 = n + 4               # 2 * (n/2 + 2)
    h_n2 = 2 * g + n + 2 - 2 * d  # 2 * (g + n/2 + 1 - d)
    return (
        h_m2 * h_n2 >= 4 * (g + 1)
        and h_n2 >= h_m2
        and d * d - n * (2 * g - 2) > 0
    )


def _sorted(pairs) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(pairs, key=lambda p: (p[1], p[0])))


def nonbn_closed_form(g: int) -> NonBNList:
    _check_genus(g)
    pairs = []
    for n in range(0, _n_ceiling(g) + 1, 2):
        pairs.extend((d, n) for d in range(1, g) if _closed_form_ok(g, d, n))
    # past the ceiling the lower bound sqrt((2g-2)n) already exceeds g - 1
    top = _n_ceiling(g) + 2
    assert (g - 1) ** 2 <= top * (2 * g - 2), "enumeration ceiling too low"
    return NonBNList(g, _sorted(pairs), "closed_form")


def nonbn_system(g: int) -> NonBNList:
    _check_genus(g)
    pairs = [
        (d, n)
        for n in range(0, _n_ceiling(g) + 1, 2)
        for d in range(1, g)
        if _system_ok(g, d, n)
    ]
    return NonBNList(g, _sorted(pairs), "system")


def is_nonbn(g: int, d: int, n: int) -> bool:
    target = canonicalize(NLPair.of(g, d, n))
    return target in nonbn_closed_form(g).canonical()
