"""Curve-class loci, generator sets and structural relation checks.

The locus ``C_{d,n}`` of surfaces containing *some* class with invariants
``(d, n)`` is a finite union of irreducible NL divisors.  A divisor with
standard class ``beta'`` lies in it when ``x L + y beta'`` has the right
invariants for some integers ``x, y``; then ``disc(d, n) = y^2 disc(host)``.
Multiplicities of the components are not tracked.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import isqrt

from .errors import InvalidSource, UnsupportedGenus
from .lattice import (
    CanonicalDivisor,
    GenusContext,
    NLPair,
    canonicalize,
    discriminant,
    is_valid_divisor,
    represent,
)
from .nonbn import nonbn_closed_form
from .picard import rho

log = logging.getLogger(__name__)

__all__ = [
    "SupportSet",
    "GeneratorSet",
    "Check",
    "Report",
    "decompose",
    "decompose_bruteforce",
    "generators",
    "GENERATOR_GENERA",
    "PETERSON_RELATION",
    "check_peterson_relation",
    "elliptic_divisors",
    "split_elliptic",
]

GENERATOR_GENERA = (6, 7, 8, 9, 10, 12)

# Linear relation among the g = 12 generators, keyed by (d, n).
PETERSON_RELATION: dict[tuple[int, int], int] = {
    (8, 2): 3,
    (9, 2): -1,
    (10, 4): -4,
    (11, 4): 2,
    (4, 0): 8,
    (5, 0): -5,
    (6, 0): 1,
}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


@dataclass(frozen=True)
class Report:
    checks: tuple[Check, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __len__(self):
        return len(self.checks)

    def __iter__(self):
        return iter(self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _sorted_members(members) -> tuple[CanonicalDivisor, ...]:
    return tuple(sorted(set(members), key=CanonicalDivisor.sort_key))


@dataclass(frozen=True)
class SupportSet:
    g: int
    source: NLPair
    members: tuple[CanonicalDivisor, ...]

    def labels(self) -> list[str]:
        return [m.label() for m in self.members]

    def __contains__(self, item) -> bool:
        return item in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class GeneratorSet:
    g: int
    members: tuple[CanonicalDivisor, ...]
    expected_rank: int
    relation_dim: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "relation_dim", len(self.members) - self.expected_rank)

    def labels(self) -> list[str]:
        return [m.label() for m in self.members]

    def __contains__(self, item) -> bool:
        return item in self.members

    def __len__(self) -> int:
        return len(self.members)


def _source(g: int, d: int, n: int) -> NLPair:
    src = NLPair.of(g, d, n)
    if n % 2:
        raise InvalidSource(f"n = {n} is odd", "odd_n")
    if discriminant(src) <= 0:
        raise InvalidSource(
            f"discriminant {discriminant(src)} of (d={d}, n={n}) is not positive", "nonpositive_delta"
        )
    return src


def _square_divisors(delta: int):
    for k in range(1, isqrt(delta) + 1):
        if delta % (k * k) == 0:
            yield k


def decompose(g: int, d: int, n: int, bound: int | None = None) -> SupportSet:
    """Irreducible NL divisors supporting ``C_{d,n}`` in genus ``g``.

    The locus only depends on the class up to ``beta -> +-beta + mL``, so the
    search runs on the standard representative of ``(d, n)``; that keeps
    every solution inside ``|x|, |y| <= max(4, delta)``.
    """
    src = _source(g, d, n)
    delta = discriminant(src)
    floor = max(4, delta)
    if bound is None:
        bound = floor
    elif bound < floor:
        raise ValueError(f"bound must be >= max(4, delta) = {floor}, got {bound}")
    ctx = src.ctx
    std = canonicalize(src).standard_pair()
    ell_sq, evenmod = ctx.ell_sq, ctx.evenmod

    members = []
    for k in _square_divisors(delta):
        sub = delta // (k * k)
        for r in range(ctx.g):
            if (r * r - sub) % evenmod:
                continue
            if (k * r - std.d) % ell_sq and (k * r + std.d) % ell_sq:
                continue
            host = CanonicalDivisor(ctx, sub, r)
            if represent(host, std, bound):
                members.append(host)
    return SupportSet(g, src, _sorted_members(members))


def decompose_bruteforce(g: int, d: int, n: int) -> SupportSet:
    """Reference decomposition by scanning all ``(r', x, y)`` directly.

    For each residue ``r'`` and each vector ``x L + y beta'`` with
    ``v.L = d`` the host's ``n'`` is solved from ``v.v = n``; whatever host
    comes out valid is collected.  Uses the raw ``(d, n)``.
    """
    src = _source(g, d, n)
    delta = discriminant(src)
    ell_sq = src.ctx.ell_sq
    y_max = isqrt(delta)
    x_max = y_max + abs(d) // ell_sq + 1
    members = set()
    for r in range(g):
        for y in range(-y_max, y_max + 1):
            if y == 0:
                continue
            for x in range(-x_max, x_max + 1):
                if x * ell_sq + y * r != d:
                    continue
                rest = n - x * x * ell_sq - 2 * x * y * r
                if rest % (y * y):
                    continue
                host_n = rest // (y * y)
                host = NLPair(src.ctx, r, host_n)
                if is_valid_divisor(host):
                    members.add(canonicalize(host))
    return SupportSet(g, src, _sorted_members(members))


def _generator_key(c: CanonicalDivisor):
    return (c.n, c.d)


def generators(g: int) -> GeneratorSet:
    """NL divisors bounding the Mukai-model locus in genus ``g``.

    These are the (-2)-class divisor ``D_{0,-2}``, the non-BN divisors, and for
    ``g = 6`` also ``D_{4,0}`` (surfaces not contained in the smooth quintic
    del Pezzo threefold).
    """
    if g not in GENERATOR_GENERA:
        raise UnsupportedGenus(f"generators are only known for g in {GENERATOR_GENERA}, got {g}")
    labels = [(0, -2), *nonbn_closed_form(g).pairs]
    if g == 6:
        labels.append((4, 0))
    members = {canonicalize(NLPair.of(g, d, n)) for d, n in labels}
    assert len(members) == len(labels), "generator labels collide"
    ordered = tuple(sorted(members, key=_generator_key))
    return GeneratorSet(g, ordered, rho(g).rho)


def check_peterson_relation(terms: dict[tuple[int, int], int] | None = None) -> Report:
    """Structural checks on the g = 12 relation among generators.

    Only validity of the labels, their membership in the generator set and the
    existence of a one-dimensional relation space are checked; the
    coefficients themselves are recorded data.
    """
    if terms is None:
        terms = PETERSON_RELATION
    g = 12
    checks = []

    bad = [(d, n) for d, n in terms if not is_valid_divisor(NLPair.of(g, d, n))]
    checks.append(
        Check(
            "labels_valid",
            not bad,
            "all labels valid" if not bad else "invalid: " + " ".join(f"D_{{{d},{n}}}" for d, n in bad),
        )
    )

    gens = generators(g)
    outside = [
        (d, n) for d, n in terms
        if (d, n) in bad or canonicalize(NLPair.of(g, d, n)) not in gens
    ]
    checks.append(
        Check(
            "labels_in_generators",
            not outside,
            "all labels among g=12 generators"
            if not outside
            else "not generators: " + " ".join(f"D_{{{d},{n}}}" for d, n in outside),
        )
    )

    checks.append(
        Check(
            "relation_space_dim",
            gens.relation_dim == 1,
            f"{len(gens)} generators, rank {gens.expected_rank}, relation_dim {gens.relation_dim}",
        )
    )
    return Report(tuple(checks))


def split_elliptic(g: int, d_max: int) -> tuple[list[CanonicalDivisor], list[CanonicalDivisor]]:
    """Canonical forms of ``D_{d,0}``, ``d = 1..d_max``, split into kept/excluded.

    A class is kept when its standard representative is still an ``n = 0``
    label; otherwise (``d >= g``) it is a different divisor and is excluded.
    """
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    ctx = GenusContext(g)
    kept, excluded = [], []
    for d in range(1, d_max + 1):
        c = canonicalize(NLPair(ctx, d, 0))
        if c.n == 0:
            if c not in kept:
                kept.append(c)
        elif c not in excluded:
            excluded.append(c)
    return kept, excluded


def elliptic_divisors(g: int, d_max: int) -> list[CanonicalDivisor]:
    kept, excluded = split_elliptic(g, d_max)
    for c in excluded:
        log.info("g=%d: D_{d,0} with delta=%d is %s, not an elliptic label", g, c.delta, c.label())
    return kept
