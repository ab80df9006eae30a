"""Catalog of Mukai models for genus 6..10 and 12.

A general Brill-Noether general surface of these genera is cut out of a
homogeneous space ``X_g`` by a section of a bundle ``E_g``; the sections are
parametrized by ``W_g`` with an action of ``G_g``.  Each record stores the
numbers, and :func:`validate` recomputes what can be recomputed
(Grassmannian dimensions and degrees, classical group dimensions) rather than
trusting the stored value.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import comb, factorial

from .divisors import Check, Report
from .errors import UnsupportedGenus

__all__ = [
    "MukaiModel",
    "CATALOG",
    "CATALOG_VERSION",
    "SUPPORTED_GENERA",
    "MODULI_DIM",
    "model",
    "validate",
    "check_degrees",
    "git_facts",
    "grassmannian_dim",
    "grassmannian_degree",
    "group_dim",
    "catalog_document",
    "catalog_json",
]

CATALOG_VERSION = "1"
MODULI_DIM = 19
SUPPORTED_GENERA = (6, 7, 8, 9, 10, 12)


def grassmannian_dim(k: int, m: int) -> int:
    return k * (m - k)


def grassmannian_degree(k: int, m: int) -> int:
    """Plucker degree of Gr(k, m): ``(k(m-k))! * prod_{i<k} i!/(m-k+i)!``."""
    num = factorial(k * (m - k))
    den = 1
    for i in range(k):
        num *= factorial(i)
        den *= factorial(m - k + i)
    assert num % den == 0
    return num // den


_EXCEPTIONAL_GROUP_DIMS = {"G2": 14}


def group_dim(family: str, n: int = 0) -> int:
    """Dimension of a classical group by family name, or a stored exceptional one."""
    if family in ("SL", "PGL", "PSL"):
        return n * n - 1
    if family == "Sp":
        if n % 2:
            raise ValueError("Sp(n) needs even n")
        m = n // 2
        return m * (2 * m + 1)
    if family in ("Spin", "SO"):
        return n * (n - 1) // 2
    if family in _EXCEPTIONAL_GROUP_DIMS:
        return _EXCEPTIONAL_GROUP_DIMS[family]
    raise ValueError(f"unknown group family {family!r}")


def _space_dim(space: tuple) -> int:
    kind = space[0]
    if kind == "Gr":
        return grassmannian_dim(space[1], space[2])
    if kind == "P":
        return space[1] - 1  # projectivization of a space of that dimension
    raise ValueError(f"unknown parameter space kind {kind!r}")


@dataclass(frozen=True)
class MukaiModel:
    g: int
    ambient_name: str
    ambient_dim: int
    section_space_dim: int
    bundle_desc: str
    bundle_rank: int
    parameter_space_desc: str
    parameter_space: tuple
    parameter_dim: int
    group_name: str
    group: tuple
    group_dim: int
    fiber_dim: int = 0
    rs_factorization: tuple[int, int] | None = None
    ambient_degree: int = 0
    degree_factor: int = 1
    ambient_grassmannian: tuple[int, int] | None = None
    derived: tuple[str, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def moduli_dim(self) -> int:
        return self.parameter_dim - self.group_dim + self.fiber_dim

    def as_dict(self) -> dict:
        out = asdict(self)
        out["moduli_dim"] = self.moduli_dim
        for key in ("parameter_space", "group", "rs_factorization", "ambient_grassmannian",
                    "derived", "notes"):
            if out[key] is not None:
                out[key] = list(out[key])
        return out


CATALOG: dict[int, MukaiModel] = {
    m.g: m
    for m in (
        MukaiModel(
            g=6,
            ambient_name="Gr(2,5)",
            ambient_dim=6,
            section_space_dim=23,
            bundle_desc="O(1)^3 + O(2): quadric section of the quintic del Pezzo threefold F_5",
            bundle_rank=4,
            parameter_space_desc="P(H^0(F_5, O(2)))",
            parameter_space=("P", 23),
            parameter_dim=22,
            group_name="PSL(2)",
            group=("PSL", 2),
            group_dim=3,
            rs_factorization=(2, 3),
            ambient_degree=5,
            degree_factor=2,
            ambient_grassmannian=(2, 5),
            derived=("section_space_dim",),
            notes=(
                "h^0(F_5, O(2)) = 23 is forced by 22 - 3 = 19",
                "the same surfaces are quadric sections of codimension-3 linear sections of Gr(2,5)",
            ),
        ),
        MukaiModel(
            g=7,
            ambient_name="IGr(5,10)",
            ambient_dim=10,
            section_space_dim=16,
            bundle_desc="O^8: codimension eight linear section",
            bundle_rank=8,
            parameter_space_desc="Gr(8, V_7)",
            parameter_space=("Gr", 8, 16),
            parameter_dim=64,
            group_name="Spin(10)",
            group=("Spin", 10),
            group_dim=45,
            ambient_degree=12,
            notes=("rank-5 bundle with determinant L^2, so no (r, s) factorization",),
        ),
        MukaiModel(
            g=8,
            ambient_name="Gr(2,6)",
            ambient_dim=8,
            section_space_dim=15,
            bundle_desc="O^6: codimension six linear section",
            bundle_rank=6,
            parameter_space_desc="Gr(6, V_8)",
            parameter_space=("Gr", 6, 15),
            parameter_dim=54,
            group_name="SL(6)",
            group=("SL", 6),
            group_dim=35,
            rs_factorization=(2, 4),
            ambient_degree=14,
            ambient_grassmannian=(2, 6),
            notes=("the homogeneous-space group is also listed as PGL(6); same dimension",),
        ),
        MukaiModel(
            g=9,
            ambient_name="LGr(3,6)",
            ambient_dim=6,
            section_space_dim=14,
            bundle_desc="O^4: codimension four linear section",
            bundle_rank=4,
            parameter_space_desc="Gr(4, V_9)",
            parameter_space=("Gr", 4, 14),
            parameter_dim=40,
            group_name="Sp(6)",
            group=("Sp", 6),
            group_dim=21,
            rs_factorization=(3, 3),
            ambient_degree=16,
        ),
        MukaiModel(
            g=10,
            ambient_name="G2/P (adjoint variety in P^13)",
            ambient_dim=5,
            section_space_dim=14,
            bundle_desc="O(1)^3: codimension three linear section",
            bundle_rank=3,
            parameter_space_desc="Gr(3, V_10)",
            parameter_space=("Gr", 3, 14),
            parameter_dim=33,
            group_name="G2 modulo its center",
            group=("G2",),
            group_dim=14,
            rs_factorization=(2, 5),
            ambient_degree=18,
            notes=("G2 has trivial center; the group is G2 itself",),
        ),
        MukaiModel(
            g=12,
            ambient_name="Gr(3,7)",
            ambient_dim=12,
            section_space_dim=21,
            bundle_desc="(wedge^2 F)^3 cuts Gr(3,V,N) in P^13, then a hyperplane section",
            bundle_rank=10,
            parameter_space_desc="Gr(3, wedge^2 V^*) // PGL(V), then a P^13-bundle",
            parameter_space=("Gr", 3, 21),
            parameter_dim=54,
            group_name="PGL(7)",
            group=("PGL", 7),
            group_dim=48,
            fiber_dim=13,
            rs_factorization=(3, 4),
            ambient_degree=22,
            notes=(
                "ambient_degree is the degree of the Fano threefold Gr(3,V,N)",
                "special threefolds (Mukai-Umemura, G_a and G_m automorphism types) "
                "form families of dimension at most one",
            ),
        ),
    )
}


def model(g: int, catalog: dict[int, MukaiModel] | None = None) -> MukaiModel:
    cat = CATALOG if catalog is None else catalog
    if g not in cat:
        raise UnsupportedGenus(f"no Mukai model recorded for g={g}; supported {SUPPORTED_GENERA}")
    return cat[g]


def validate(m: MukaiModel) -> Report:
    """Dimension checks for one catalog record."""
    checks = [
        Check(
            "moduli_dim",
            m.moduli_dim == MODULI_DIM,
            f"{m.parameter_dim} - {m.group_dim} + {m.fiber_dim} = {m.moduli_dim}",
        ),
    ]
    pdim = _space_dim(m.parameter_space)
    checks.append(Check("parameter_dim", pdim == m.parameter_dim,
                        f"recomputed {pdim}, stored {m.parameter_dim}"))
    gdim = group_dim(*m.group)
    checks.append(Check("group_dim", gdim == m.group_dim,
                        f"recomputed {gdim}, stored {m.group_dim}"))
    surface_dim = m.ambient_dim - m.bundle_rank
    checks.append(Check("surface_dim", surface_dim == 2,
                        f"{m.ambient_dim} - {m.bundle_rank} = {surface_dim}"))
    if m.parameter_space[0] == "Gr" and m.g != 12:
        k, total = m.parameter_space[1], m.parameter_space[2]
        ok = k == m.bundle_rank and total == m.section_space_dim
        checks.append(Check("parameter_space_shape", ok,
                            f"Gr({k},{total}) vs rank {m.bundle_rank}, h^0 {m.section_space_dim}"))
    if m.ambient_grassmannian is not None:
        k, total = m.ambient_grassmannian
        ok = grassmannian_dim(k, total) == m.ambient_dim
        checks.append(Check("ambient_dim", ok, f"dim Gr({k},{total}) = {grassmannian_dim(k, total)}"))
    if m.rs_factorization is not None:
        r, s = m.rs_factorization
        checks.append(Check("rs_factorization", r * s == m.g, f"{r} * {s} = {r * s}"))
    else:
        checks.append(Check("rs_factorization", m.g == 7, "no factorization recorded"))
    return Report(tuple(checks))


def check_degrees(g: int, catalog: dict[int, MukaiModel] | None = None) -> Report:
    """The model's degree must be ``2g - 2``, the degree of the image in P^g."""
    m = model(g, catalog)
    checks = []
    if m.ambient_grassmannian is not None:
        k, total = m.ambient_grassmannian
        deg = grassmannian_degree(k, total)
        checks.append(Check("ambient_degree", deg == m.ambient_degree,
                            f"deg Gr({k},{total}) = {deg}, stored {m.ambient_degree}"))
    surface_deg = m.ambient_degree * m.degree_factor
    checks.append(Check("surface_degree", surface_deg == 2 * g - 2,
                        f"{m.degree_factor} * {m.ambient_degree} = {surface_deg} vs 2g-2 = {2 * g - 2}"))
    return Report(tuple(checks))


# g = 12: dimensions recorded in the stability argument for Gr(3, wedge^2 V^*).
GIT_FACTS_12 = {
    "dim_V": 7,
    "boundary_dim": 53,
    "incidence_dim": 56,
    "generic_fiber_dim": 3,
    "decomposable_locus_dim": 14,
    "incidence_fiber_dim": 50,
}


def git_facts(g: int, facts: dict | None = None) -> Report:
    if g != 12:
        return Report()
    f = dict(GIT_FACTS_12 if facts is None else facts)
    v = f["dim_V"]
    wedge2 = comb(v, 2)
    gr_dim = grassmannian_dim(3, wedge2)
    # D_v = (cone over Gr(2, V/v) x V/v) / C^*, inside P(wedge^2 V^*)
    quotient = v - 1
    dv = (grassmannian_dim(2, quotient) + 1) + quotient - 1
    # R_v fibers over D_v with fiber Gr(2, wedge^2 V^* / omega)
    rv = dv + grassmannian_dim(2, wedge2 - 1)
    omega = rv + (v - 1)  # plus dim P(V^*)
    checks = (
        Check("grassmannian_dim", gr_dim == 54, f"dim Gr(3,{wedge2}) = {gr_dim}"),
        Check("boundary_codim", gr_dim - f["boundary_dim"] == 1,
              f"{gr_dim} - {f['boundary_dim']} = {gr_dim - f['boundary_dim']}"),
        Check("decomposable_locus_dim", dv == f["decomposable_locus_dim"],
              f"recomputed {dv}, recorded {f['decomposable_locus_dim']}"),
        Check("incidence_fiber_dim", rv == f["incidence_fiber_dim"],
              f"recomputed {rv}, recorded {f['incidence_fiber_dim']}"),
        Check("incidence_dim", omega == f["incidence_dim"],
              f"{rv} + {v - 1} = {omega}, recorded {f['incidence_dim']}"),
        Check("fiber_consistency",
              f["incidence_dim"] - f["generic_fiber_dim"] == f["boundary_dim"],
              f"{f['incidence_dim']} - {f['generic_fiber_dim']} = "
              f"{f['incidence_dim'] - f['generic_fiber_dim']}"),
    )
    return Report(checks)


def _assert_catalog(catalog):
    for m in catalog.values():
        failed = [c for c in validate(m) if not c.passed]
        failed += [c for c in check_degrees(m.g, catalog) if not c.passed]
        if failed:
            raise AssertionError(f"catalog entry g={m.g} inconsistent: {failed}")


_assert_catalog(CATALOG)


def catalog_document(catalog: dict[int, MukaiModel] | None = None) -> dict:
    cat = CATALOG if catalog is None else catalog
    return {
        "catalog_version": CATALOG_VERSION,
        "moduli_dim": MODULI_DIM,
        "models": [cat[g].as_dict() for g in sorted(cat)],
    }


def catalog_json(catalog: dict[int, MukaiModel] | None = None) -> str:
    return json.dumps(catalog_document(catalog), sort_keys=True, indent=2)
