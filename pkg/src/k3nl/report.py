"""Full cross-check of computed tables against published values."""
from __future__ import annotations

from dataclasses import dataclass

from . import published as pub
from .divisors import check_peterson_relation, decompose, generators
from .lattice import NLPair, canonicalize
from .mukai import CATALOG, check_degrees, git_facts, model, validate
from .nonbn import nonbn_closed_form
from .picard import rho

REPORT_GENERA = (6, 7, 8, 9, 10, 12)


@dataclass(frozen=True)
class ReportRow:
    g: int
    section: str
    check: str
    status: str
    detail: str
    provenance: str = ""

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "section": self.section,
            "check": self.check,
            "status": self.status,
            "detail": self.detail,
            "provenance": self.provenance,
        }


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _canon_set(g, pairs):
    return {canonicalize(NLPair.of(g, d, n)) for d, n in pairs}


def _labels(divisors) -> str:
    return " ".join(c.label() for c in sorted(divisors, key=lambda c: (c.n, c.d)))


def _genus_rows(g: int, catalog) -> list[ReportRow]:
    rows = []
    value = rho(g).rho
    rows.append(ReportRow(g, "rank", "rho", _status(value == pub.RHO[g]),
                          f"computed {value} published {pub.RHO[g]}", pub.RHO_PROVENANCE[g]))

    gens = generators(g)
    expected = _canon_set(g, pub.BASIS[g])
    prov = pub.PROV_GENERATORS_12 if g == 12 else pub.PROV_BASIS
    rows.append(ReportRow(g, "generators", "members", _status(set(gens.members) == expected),
                          _labels(gens.members), prov))
    want_rel = 1 if g == 12 else 0
    rows.append(ReportRow(g, "generators", "relation_dim", _status(gens.relation_dim == want_rel),
                          f"{len(gens)} members rank {gens.expected_rank} relation_dim {gens.relation_dim}",
                          pub.PROV_RANK_12 if g == 12 else pub.PROV_BASIS))
    if g == 6:
        d40 = canonicalize(NLPair.of(6, 4, 0))
        rows.append(ReportRow(g, "generators", "singular_fano_d40", _status(d40 in gens),
                              d40.label(), pub.PROV_G6_SINGULAR_FANO))

    nonbn = nonbn_closed_form(g)
    rows.append(ReportRow(g, "nonbn", "list", _status(nonbn.canonical() == _canon_set(g, pub.nonbn_list(g))),
                          " ".join(nonbn.labels()), pub.PROV_NONBN))

    c20 = decompose(g, 2, 0)
    rows.append(ReportRow(g, "decompose", "c_2_0",
                          _status(set(c20.members) == _canon_set(g, pub.c20_components(g))),
                          " ".join(c20.labels()), pub.PROV_C20))
    c10 = decompose(g, 1, 0)
    rows.append(ReportRow(g, "decompose", "c_1_0",
                          _status(set(c10.members) == _canon_set(g, [(1, 0)])),
                          " ".join(c10.labels()), pub.PROV_C20))

    m = model(g, catalog)
    for c in (*validate(m), *check_degrees(g, catalog), *git_facts(g)):
        prov = pub.PROV_GIT_12 if c.name in {x.name for x in git_facts(g)} else pub.PROV_MUKAI
        rows.append(ReportRow(g, "catalog", c.name, c.status, c.detail, prov))

    if g == 12:
        for c in check_peterson_relation():
            rows.append(ReportRow(g, "relation", c.name, c.status, c.detail, pub.PROV_RELATION))
    return rows


def build_report(catalog=None) -> list[ReportRow]:
    cat = CATALOG if catalog is None else catalog
    rows = []
    for g in REPORT_GENERA:
        rows.extend(_genus_rows(g, cat))
    return rows
