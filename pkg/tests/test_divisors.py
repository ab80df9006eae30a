import logging
import random

import pytest

from k3nl.divisors import (
    GENERATOR_GENERA,
    PETERSON_RELATION,
    check_peterson_relation,
    decompose,
    decompose_bruteforce,
    elliptic_divisors,
    generators,
    split_elliptic,
)
from k3nl.errors import InvalidSource, UnsupportedGenus
from k3nl.lattice import NLPair, canonicalize, discriminant, equivalent, represent
from k3nl.picard import rho


def canon(g, pairs):
    return {canonicalize(NLPair.of(g, d, n)) for d, n in pairs}


def random_sources(count, seed, g_max=20, delta_max=400):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = rng.randint(2, g_max)
        d = rng.randint(-60, 60)
        n = 2 * rng.randint(-40, 40)
        delta = d * d - (2 * g - 2) * n
        if 0 < delta <= delta_max:
            out.append((g, d, n))
    return out


@pytest.mark.parametrize(
    "g, d, n, expected",
    [
        (7, 2, 0, [(1, 0), (2, 0), (5, 2)]),
        (6, 2, 0, [(1, 0), (2, 0)]),
        (9, 1, 0, [(1, 0)]),
        (11, 2, 0, [(1, 0), (2, 0), (9, 4)]),
    ],
)
def test_decompose_examples(g, d, n, expected):
    assert set(decompose(g, d, n).members) == canon(g, expected)


def test_decompose_order_and_labels():
    s = decompose(7, 2, 0)
    assert s.labels() == ["D_{1,0}", "D_{5,2}", "D_{2,0}"]
    assert s.source == NLPair.of(7, 2, 0)


@pytest.mark.parametrize("g", range(2, 31))
def test_degree_one_class_is_primitive(g):
    assert set(decompose(g, 1, 0).members) == canon(g, [(1, 0)])


@pytest.mark.parametrize("g", [g for g in range(2, 13) if g not in (7, 11)])
def test_degree_two_elliptic(g):
    assert set(decompose(g, 2, 0).members) == canon(g, [(1, 0), (2, 0)])


@pytest.mark.parametrize("g", range(2, 25))
def test_minus_two_class(g):
    got = decompose(g, 0, -2)
    assert got.members == decompose_bruteforce(g, 0, -2).members
    assert canonicalize(NLPair.of(g, 0, -2)) in got
    extra = set(got.members) - canon(g, [(0, -2)])
    # an extra component D_{g-1,(g-2)/2} appears exactly when g = 2 mod 4
    if g % 4 == 2 and g > 2:
        assert extra == canon(g, [(g - 1, (g - 2) // 2)])
    elif g > 2:
        assert not extra


@pytest.mark.parametrize("g, d, n", random_sources(60, seed=7))
def test_decompose_invariants(g, d, n):
    s = decompose(g, d, n)
    delta = discriminant(NLPair.of(g, d, n))
    assert canonicalize(NLPair.of(g, d, n)) in s
    for m in s.members:
        assert delta % m.delta == 0
        k2 = delta // m.delta
        assert int(k2 ** 0.5 + 0.5) ** 2 == k2
        assert represent(m, canonicalize(NLPair.of(g, d, n)).standard_pair(), max(4, delta))


def test_decompose_depends_only_on_class_orbit():
    base = decompose(7, 2, 0).members
    # beta -> -beta + L: d = 12 - 2 = 10, n = 0 - 4 + 12 = 8
    assert decompose(7, 10, 8).members == base
    assert decompose(7, -2, 0).members == base


def test_decompose_rejects():
    with pytest.raises(InvalidSource):
        decompose(7, 3, 1)
    with pytest.raises(InvalidSource):
        decompose(7, 0, 0)
    with pytest.raises(ValueError):
        decompose(7, 2, 0, bound=2)


@pytest.mark.parametrize(
    "g, extra",
    [
        (6, [(5, 2), (4, 0)] + [(k, 0) for k in range(1, 4)]),
        (7, [(5, 2), (6, 2)] + [(k, 0) for k in range(1, 5)]),
        (8, [(6, 2), (7, 2)] + [(k, 0) for k in range(1, 5)]),
        (9, [(6, 2), (7, 2)] + [(k, 0) for k in range(1, 6)]),
        (10, [(7, 2), (8, 2), (9, 4)] + [(k, 0) for k in range(1, 6)]),
        (12, [(7, 2), (8, 2), (9, 2), (10, 4), (11, 4)] + [(k, 0) for k in range(1, 7)]),
    ],
)
def test_generators_match_published_bases(g, extra):
    gens = generators(g)
    assert set(gens.members) == canon(g, [(0, -2)] + extra)
    assert gens.expected_rank == rho(g).rho
    assert gens.relation_dim == (1 if g == 12 else 0)
    assert gens.labels()[0] == "D_{0,-2}"


@pytest.mark.parametrize("g", GENERATOR_GENERA)
def test_generators_pairwise_inequivalent(g):
    members = generators(g).members
    pairs = [m.standard_pair() for m in members]
    for i, a in enumerate(pairs):
        for b in pairs[i + 1:]:
            assert not equivalent(a, b)


@pytest.mark.parametrize("g", [2, 5, 11, 13])
def test_generators_unsupported(g):
    with pytest.raises(UnsupportedGenus):
        generators(g)


def test_peterson_relation_passes():
    report = check_peterson_relation()
    assert report.passed
    assert [c.name for c in report] == ["labels_valid", "labels_in_generators", "relation_space_dim"]


def test_peterson_relation_mutations():
    odd = dict(PETERSON_RELATION)
    odd[(7, 3)] = 1
    r = check_peterson_relation(odd)
    assert not r["labels_valid"].passed

    outside = dict(PETERSON_RELATION)
    del outside[(10, 4)]
    outside[(12, 4)] = -4
    r = check_peterson_relation(outside)
    assert r["labels_valid"].passed
    assert not r["labels_in_generators"].passed
    assert r["relation_space_dim"].passed


def test_elliptic_divisors(caplog):
    assert elliptic_divisors(5, 3) == sorted(canon(5, [(1, 0), (2, 0), (3, 0)]), key=lambda c: c.delta)
    assert elliptic_divisors(6, 1) == list(canon(6, [(1, 0)]))
    with caplog.at_level(logging.INFO, logger="k3nl.divisors"):
        kept = elliptic_divisors(7, 7)
    assert len(kept) == 6
    assert "D_{5,-2}" in caplog.text


def test_split_elliptic_oracle():
    # oracle: canonicalize each d, keep those whose standard form is still n = 0
    for g in range(2, 15):
        kept, excluded = split_elliptic(g, 3 * g)
        seen = []
        for d in range(1, 3 * g + 1):
            c = canonicalize(NLPair.of(g, d, 0))
            if c not in seen:
                seen.append(c)
        assert set(kept) | set(excluded) == set(seen)
        assert all(c.n == 0 for c in kept) and all(c.n != 0 for c in excluded)
        assert len(kept) == g - 1
