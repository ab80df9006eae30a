"""Command-line interface.

    k3nl rho --g 2..10 --format csv
    k3nl nonbn --g 10
    k3nl decompose --g 7 --d 2 --n 0
    k3nl canon --g 7 --d 17 --n 24
    k3nl generators --g 12
    k3nl catalog [--full]
    k3nl report

Machine output goes to stdout only; diagnostics go to stderr.  Exit codes:
0 ok, 2 usage, 3 non-integral rank, 4 domain error, 5 report failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import published as pub
from .divisors import decompose, generators
from .errors import K3NLError, NonIntegralRho
from .lattice import NLPair, canonicalize
from .mukai import CATALOG, catalog_json, validate, check_degrees
from .nonbn import nonbn_closed_form
from .picard import rho
from .report import build_report

SCHEMA_VERSION = "1"
FORMAT_ENV = "K3NL_FORMAT"
FORMATS = ("table", "json", "csv")
GENUS_MIN, GENUS_MAX = 2, 10000

EXIT_OK, EXIT_USAGE, EXIT_NONINTEGRAL, EXIT_DOMAIN, EXIT_REPORT = 0, 2, 3, 4, 5


def genus_range(text: str) -> list[int]:
    """Parse ``"12"`` or the inclusive range ``"2..10"``."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a genus or range a..b: {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    if lo < GENUS_MIN or hi > GENUS_MAX:
        raise argparse.ArgumentTypeError(f"genus must lie in [{GENUS_MIN}, {GENUS_MAX}], got {text!r}")
    return list(range(lo, hi + 1))


def _divisor_row(g, c) -> dict:
    return {"g": g, "d": c.d, "n": c.n, "delta": c.delta, "r": c.r, "label": c.label()}


def _cmd_rho(args):
    rows = [rho(g).as_dict() for g in args.g]
    return {"g": args.g_text}, rows, ["formula:closed-form-rank-of-nl-span"]


def _cmd_generators(args):
    rows = []
    for g in args.g:
        gens = generators(g)
        rows.append({
            "g": g,
            "rho": gens.expected_rank,
            "relation_dim": gens.relation_dim,
            "members": gens.labels(),
        })
    prov = [pub.PROV_BASIS] + ([pub.PROV_GENERATORS_12] if 12 in args.g else [])
    return {"g": args.g_text}, rows, prov


def _cmd_nonbn(args):
    rows = []
    for g in args.g:
        for d, n in nonbn_closed_form(g):
            rows.append(_divisor_row(g, canonicalize(NLPair.of(g, d, n))))
    return {"g": args.g_text}, rows, [pub.PROV_NONBN]


def _cmd_decompose(args):
    support = decompose(args.g, args.d, args.n, args.bound)
    rows = [_divisor_row(args.g, c) for c in support.members]
    inputs = {"g": args.g, "d": args.d, "n": args.n, "bound": args.bound}
    return inputs, rows, []


def _cmd_canon(args):
    c = canonicalize(NLPair.of(args.g, args.d, args.n))
    return {"g": args.g, "d": args.d, "n": args.n}, [_divisor_row(args.g, c)], []


def _cmd_catalog(args, catalog):
    rows = []
    for g in sorted(catalog):
        if args.g is not None and g != args.g:
            continue
        m = catalog[g]
        ok = all(c.passed for c in (*validate(m), *check_degrees(g, catalog)))
        rows.append({
            "g": g,
            "ambient": m.ambient_name,
            "ambient_dim": m.ambient_dim,
            "section_space_dim": m.section_space_dim,
            "parameter_space": m.parameter_space_desc,
            "parameter_dim": m.parameter_dim,
            "group": m.group_name,
            "group_dim": m.group_dim,
            "fiber_dim": m.fiber_dim,
            "moduli_dim": m.moduli_dim,
            "rs": "" if m.rs_factorization is None else "{}x{}".format(*m.rs_factorization),
            "checks": "PASS" if ok else "FAIL",
        })
    return {"g": args.g}, rows, [pub.PROV_MUKAI]


def _cmd_report(args, catalog):
    rows = [r.as_dict() for r in build_report(catalog)]
    prov = sorted({r["provenance"] for r in rows if r["provenance"]})
    return {}, rows, prov


def _flat(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return " ".join(_flat(v) for v in value)
    return str(value)


def flatten_rows(rows: list[dict]) -> list[dict]:
    """String form of every row, as it appears in CSV."""
    return [{k: _flat(v) for k, v in row.items()} for row in rows]


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(flatten_rows(rows))
    return buf.getvalue()


def _table(rows: list[dict]) -> list[str]:
    flat = flatten_rows(rows)
    cols = list(flat[0])
    widths = {c: max(len(c), *(len(r[c]) for r in flat)) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols).rstrip()]
    lines.append("  ".join("-" * widths[c] for c in cols))
    lines += ["  ".join(r[c].ljust(widths[c]) for c in cols).rstrip() for r in flat]
    return lines


def render_table(doc: dict) -> str:
    rows = doc["results"]
    if not rows:
        return "(no results)\n"
    if doc["command"] != "report":
        return "\n".join(_table(rows)) + "\n"
    lines = []
    for g in sorted({r["g"] for r in rows}):
        block = [{k: v for k, v in r.items() if k != "g"} for r in rows if r["g"] == g]
        lines.append(f"== g = {g} ==")
        lines += _table(block)
        lines.append("")
    summary = doc["checks"]
    lines.append(f"SUMMARY: {summary['status']} ({summary['passed']}/{summary['total']} checks)")
    return "\n".join(lines) + "\n"


def _format_default() -> str:
    return os.environ.get(FORMAT_ENV, "table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="k3nl", description="NL divisors on moduli of K3 surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=FORMATS, default=None,
                       help=f"output format (default: ${FORMAT_ENV} or table)")
        return p

    p = add("rho", "rank of the NL span of the Picard group")
    p.add_argument("--g", required=True, dest="g_text", help="genus or inclusive range a..b")

    p = add("generators", "NL generator set of the Picard group")
    p.add_argument("--g", required=True, dest="g_text", help="genus or range")

    p = add("nonbn", "NL divisors covering the non-BN-general locus")
    p.add_argument("--g", required=True, dest="g_text", help="genus or range")

    for name, help_ in (("decompose", "irreducible components of C_{d,n}"),
                        ("canon", "canonical form of D_{d,n}")):
        p = add(name, help_)
        p.add_argument("--g", required=True, type=int)
        p.add_argument("--d", required=True, type=int)
        p.add_argument("--n", required=True, type=int)
        if name == "decompose":
            p.add_argument("--bound", type=int, default=None,
                           help="search box for (x, y); default max(4, delta)")

    p = add("catalog", "Mukai model catalog")
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--full", action="store_true", help="dump the full versioned catalog JSON")

    add("report", "recompute all tables and check them against published values")
    return parser


def main(argv=None, *, catalog=None, stdout=None, stderr=None) -> int:
    """Run the CLI; returns the exit code.  ``catalog`` replaces the built-in one."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    catalog = CATALOG if catalog is None else catalog
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        fmt = args.format or _format_default()
        if fmt not in FORMATS:
            parser.error(f"${FORMAT_ENV}={fmt!r} is not one of {FORMATS}")
        if hasattr(args, "g_text"):
            args.g = genus_range(args.g_text)
        elif args.command in ("decompose", "canon") and args.g < GENUS_MIN:
            parser.error(f"genus must be >= {GENUS_MIN}")
    except argparse.ArgumentTypeError as exc:
        print(f"k3nl: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "catalog" and args.full:
        stdout.write(catalog_json(catalog) + "\n")
        return EXIT_OK

    handlers = {
        "rho": _cmd_rho,
        "generators": _cmd_generators,
        "nonbn": _cmd_nonbn,
        "decompose": _cmd_decompose,
        "canon": _cmd_canon,
        "catalog": lambda a: _cmd_catalog(a, catalog),
        "report": lambda a: _cmd_report(a, catalog),
    }
    try:
        inputs, rows, provenance = handlers[args.command](args)
    except NonIntegralRho as exc:
        print(f"k3nl: {exc}", file=stderr)
        return EXIT_NONINTEGRAL
    except (K3NLError, ValueError) as exc:
        print(f"k3nl: {exc}", file=stderr)
        return EXIT_DOMAIN

    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": inputs,
        "results": rows,
        "provenance": provenance,
    }
    code = EXIT_OK
    if args.command == "report":
        failed = sum(r["status"] != "PASS" for r in rows)
        doc["checks"] = {
            "total": len(rows),
            "passed": len(rows) - failed,
            "failed": failed,
            "status": "PASS" if failed == 0 else "FAIL",
        }
        if failed:
            code = EXIT_REPORT
            print(f"k3nl: report: {failed} check(s) failed", file=stderr)

    if fmt == "json":
        stdout.write(render_json(doc))
    elif fmt == "csv":
        stdout.write(render_csv(rows))
    else:
        stdout.write(render_table(doc))
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
