import pytest

from k3nl.errors import InvalidDivisor
from k3nl.lattice import NLPair, canonicalize
from k3nl.nonbn import is_nonbn, nonbn_closed_form, nonbn_system


def elliptic(top):
    return [(d, 0) for d in range(1, top + 1)]


def brute_force_system(g):
    """Enumerate the three inequalities over a generous box, in Fractions."""
    from fractions import Fraction as F
    out = set()
    for n in range(0, 6 * g, 2):
        for d in range(-3 * g, 3 * g):
            h_m = F(n, 2) + 2
            h_n = g + F(n, 2) + 1 - d
            if h_m * h_n >= g + 1 and h_n >= h_m and d * d - n * (2 * g - 2) > 0 and d >= 1:
                out.add((d, n))
    return out


@pytest.mark.parametrize(
    "g, expected",
    [
        (6, elliptic(3) + [(5, 2)]),
        (7, elliptic(4) + [(5, 2), (6, 2)]),
        (8, elliptic(4) + [(6, 2), (7, 2)]),
        (9, elliptic(5) + [(6, 2), (7, 2)]),
        (10, elliptic(5) + [(7, 2), (8, 2), (9, 4)]),
        (12, elliptic(6) + [(7, 2), (8, 2), (9, 2), (10, 4), (11, 4)]),
    ],
)
def test_published_lists(g, expected):
    assert list(nonbn_closed_form(g).pairs) == expected
    assert list(nonbn_system(g).pairs) == expected


@pytest.mark.parametrize("g", range(2, 31))
def test_closed_form_equals_system(g):
    a, b = nonbn_closed_form(g), nonbn_system(g)
    assert a.pairs == b.pairs
    assert a.canonical() == b.canonical()
    assert (a.method, b.method) == ("closed_form", "system")


@pytest.mark.parametrize("g", range(2, 16))
def test_system_matches_unbounded_enumeration(g):
    assert set(nonbn_system(g).pairs) == brute_force_system(g)


@pytest.mark.parametrize("g", range(6, 13))
def test_elliptic_part(g):
    zero_row = [d for d, n in nonbn_closed_form(g) if n == 0]
    assert zero_row == list(range(1, (g - 1) // 2 + 2))


@pytest.mark.parametrize("g", range(2, 41))
def test_list_invariants(g):
    lst = nonbn_closed_form(g)
    for d, n in lst:
        assert d >= 1 and n >= 0 and n % 2 == 0
        assert d * d > n * (2 * g - 2)
    assert len(lst.canonical()) == len(lst)
    assert lst.pairs == tuple(sorted(lst.pairs, key=lambda p: (p[1], p[0])))


def test_is_nonbn():
    assert is_nonbn(6, 4, 0) is False
    assert is_nonbn(9, 6, 2) is True
    assert is_nonbn(6, 100, 0) is False
    # equivalent label of D^7_{5,2}
    assert is_nonbn(7, 7, 4) is True
    with pytest.raises(InvalidDivisor):
        is_nonbn(7, 3, 1)


def test_labels():
    assert nonbn_closed_form(6).labels() == ["D_{1,0}", "D_{2,0}", "D_{3,0}", "D_{5,2}"]
    assert canonicalize(NLPair.of(6, 5, 2)) in nonbn_closed_form(6).canonical()
