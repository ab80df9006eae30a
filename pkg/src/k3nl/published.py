"""Published reference values that the report compares against.

Every entry carries a provenance tag naming which published list it came
from.  Pairs are ``(d, n)`` labels as printed, before canonicalization.
"""

PROV_RANK_LIST = "published:rank-values-g6-g10"
PROV_RANK_12 = "published:rank-g12-is-11"
PROV_BASIS = "published:picard-basis-lists"
PROV_GENERATORS_12 = "published:g12-generator-list"
PROV_NONBN = "published:non-bn-divisor-lists"
PROV_C20 = "published:c20-decompositions"
PROV_G6_SINGULAR_FANO = "published:g6-singular-fano-locus-d40"
PROV_RELATION = "published:g12-linear-relation"
PROV_MUKAI = "published:mukai-models-and-git-spaces"
PROV_GIT_12 = "published:g12-stability-dimensions"

RHO = {6: 6, 7: 7, 8: 7, 9: 8, 10: 9, 12: 11}
RHO_PROVENANCE = {g: (PROV_RANK_12 if g == 12 else PROV_RANK_LIST) for g in RHO}

_elliptic = lambda top: [(k, 0) for k in range(1, top + 1)]  # noqa: E731

BASIS = {
    6: [(0, -2), (5, 2), *_elliptic(4)],
    7: [(0, -2), (5, 2), (6, 2), *_elliptic(4)],
    8: [(0, -2), (6, 2), (7, 2), *_elliptic(4)],
    9: [(0, -2), (6, 2), (7, 2), *_elliptic(5)],
    10: [(0, -2), (7, 2), (8, 2), (9, 4), *_elliptic(5)],
    12: [(0, -2), (7, 2), (8, 2), (9, 2), (10, 4), (11, 4), *_elliptic(6)],
}

NONBN_EXTRA = {
    6: [(5, 2)],
    7: [(5, 2), (6, 2)],
    8: [(6, 2), (7, 2)],
    9: [(6, 2), (7, 2)],
    10: [(7, 2), (8, 2), (9, 4)],
    12: [(7, 2), (8, 2), (9, 2), (10, 4), (11, 4)],
}


def nonbn_list(g: int) -> list[tuple[int, int]]:
    """Full published non-BN list: the elliptic part plus the extra pairs."""
    return [*_elliptic((g - 1) // 2 + 1), *NONBN_EXTRA[g]]


def c20_components(g: int) -> list[tuple[int, int]]:
    if g == 7:
        return [(1, 0), (2, 0), (5, 2)]
    return [(1, 0), (2, 0)]


C20_GENERA = tuple(g for g in range(2, 13) if g != 11)
