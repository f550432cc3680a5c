"""``liesym`` command line: analyze, sweep, submersion, validate.

Exit codes: 0 success, 1 invalid input or unsupported case, 2 internal cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from pathlib import Path

from . import __version__, documents, exact
from .catalog import FAMILIES, CatalogEntry, CatalogError, catalog, family_by_param_names
from .curvature import CapExceeded
from .killing import symmetric_subspace
from .liealg import is_unimodular, validate
from .quotient import DEFAULT_ORDER, UnsupportedCase, oneill_base_curvature, submersion_check

SELECTORS = {"r3": "R3", "su2": "SU2", "sl2r": "SL2R", "h1": "H1", "e2tilde": "E2tilde", "e11": "E11"}

CSV_TAIL = ["index", "isotropy_dim", "isometry_dim", "flat", "locally_symmetric", "constant_curvature", "status"]


def _catalog_help() -> str:
    lines = ["catalog families (select with --catalog NAME --metric NAMES=VALUES):"]
    for fam in FAMILIES.values():
        sel = next(k for k, v in SELECTORS.items() if v == fam.group)
        names = ",".join(fam.params) or "(no --metric)"
        lines.append(f"  {sel:8s} {fam.name:9s} {names:24s} {fam.constraint}")
    lines.append("  SU2/SL2R: metric diag(l, m, n); E2tilde g_mn: diag(1, m, n), flat: diag(a, a, b);")
    lines.append("  E11 g_n: diag(1, 1, n), g_mn: [[1,1,0],[1,m,0],[0,0,n]]; spd: upper-triangular entries")
    return "\n".join(lines)


def parse_metric_spec(spec: str) -> list[tuple[str, str]]:
    """``"l,m,n=1,2,1"`` or ``"l=1,m=2,n=1"`` -> [(name, value), ...]."""
    spec = spec.strip()
    if not spec:
        return []
    if spec.count("=") == 1:
        left, right = spec.split("=")
        names = [s.strip() for s in left.split(",")]
        values = [s.strip() for s in right.split(",")]
        if len(names) != len(values):
            raise ValueError(f"--metric {spec!r}: {len(names)} names but {len(values)} values")
        return list(zip(names, values))
    pairs = []
    for part in spec.split(","):
        if part.count("=") != 1:
            raise ValueError(f"--metric {spec!r}: cannot read {part!r}")
        k, v = part.split("=")
        pairs.append((k.strip(), v.strip()))
    return pairs


def _group(selector: str) -> str:
    try:
        return SELECTORS[selector.lower()]
    except KeyError:
        raise CatalogError(f"unknown catalog {selector!r}; choose from {', '.join(SELECTORS)}") from None


def catalog_entry(selector: str, metric: str | None) -> CatalogEntry:
    group = _group(selector)
    pairs = parse_metric_spec(metric or "")
    given = dict(pairs)
    if len(given) != len(pairs):
        raise ValueError("--metric names a parameter twice")
    fam = next(
        (f for f in FAMILIES.values() if f.group == group and set(f.params) == set(given)), None
    )
    if fam is None:
        fam = family_by_param_names(group, tuple(given))
    values = tuple(exact.parse_rational(given[name]) for name in fam.params)
    return CatalogEntry(group, fam.name, values)


def load_algebra(args, check: bool = True):
    if args.file:
        doc = documents.loads(Path(args.file).read_text(encoding="utf-8"))
        return documents.parse_algebra(doc, check=check)
    if args.catalog:
        return catalog(catalog_entry(args.catalog, args.metric))
    raise ValueError("give either --catalog or --file")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _submersion_parts(a, report, order):
    verdict = submersion_check(a, report, order)
    base = None
    if verdict.constant:
        h = verdict.horizontal_basis
        base = oneill_base_curvature(a, report, h[0], h[1], order)
    return documents.render_verdict(verdict, base)


def cmd_analyze(args) -> int:
    a = load_algebra(args)
    report = symmetric_subspace(a)
    order = args.derivative_order
    if report.index == 1:
        verdict, note = _submersion_parts(a, report, order), None
    else:
        verdict, note = None, f"not applicable: quotient analysis needs index 1, got {report.index}"
    doc = documents.render_report(a, report, verdict, order, note)
    _emit(documents.dumps(doc) if args.json else documents.render_text(doc), args.out)
    return 0


def cmd_submersion(args) -> int:
    a = load_algebra(args)
    report = symmetric_subspace(a)
    if report.index != 1:
        raise UnsupportedCase(f"submersion check needs index of symmetry 1, got {report.index}")
    order = args.derivative_order
    doc = {
        "tool": {"name": "liesym", "version": __version__},
        "input": {"name": a.name, "sha256": documents.algebra_hash(a), "algebra": documents.serialize_algebra(a)},
        "submersion": _submersion_parts(a, report, order),
        "derivative_order": order,
        "derivative_order_rationale": documents.ORDER_RATIONALE,
        "caveat": report.caveat,
    }
    _emit(documents.dumps(doc) if args.json else documents.render_text(doc), args.out)
    return 0


def cmd_validate(args) -> int:
    a = load_algebra(args, check=False)
    problems = validate(a)
    doc = {"valid": not problems, "violations": problems,
           "unimodular": None if problems else is_unimodular(a)}
    if args.json:
        text = documents.dumps(doc)
    elif problems:
        text = "invalid:\n" + "".join(f"  - {p}\n" for p in problems)
    else:
        text = f"ok (unimodular: {doc['unimodular']})\n"
    _emit(text, args.out)
    return 1 if problems else 0


def _threads() -> int:
    raw = os.environ.get("LIESYM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def sweep_rows(group: str, grid: dict[str, list]) -> tuple[list[str], list[list[str]]]:
    """One CSV row per grid point, lexicographic in the family's parameter order."""
    fam = next((f for f in FAMILIES.values() if f.group == group and set(f.params) == set(grid)), None)
    if fam is None:
        fam = family_by_param_names(group, tuple(grid))
    axes = [sorted(set(grid[name])) for name in fam.params]
    points = list(product(*axes))

    def run(point):
        shown = [exact.format_rational(p) for p in point]
        try:
            entry = CatalogEntry(group, fam.name, point)
        except CatalogError as err:
            return shown + [""] * (len(CSV_TAIL) - 1) + [f"skipped: {err}"]
        rep = symmetric_subspace(catalog(entry))
        f = rep.flags
        return shown + [str(rep.index), str(rep.isotropy_dim), str(rep.isometry_dim),
                        str(f.flat).lower(), str(f.locally_symmetric).lower(),
                        str(f.constant_curvature).lower(), "ok"]

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        rows = list(pool.map(run, points))
    return list(fam.params) + CSV_TAIL, rows


def cmd_sweep(args) -> int:
    group = _group(args.catalog)
    grid: dict[str, list] = {}
    for item in args.grid or []:
        if item.count("=") != 1:
            raise ValueError(f"--grid {item!r}: expected NAME=v1,v2,...")
        name, values = item.split("=")
        if name.strip() in grid:
            raise ValueError(f"--grid names {name!r} twice")
        grid[name.strip()] = [exact.parse_rational(v) for v in values.split(",")]
    header, rows = sweep_rows(group, grid)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    for row in rows:
        if row[-1].startswith("skipped"):
            print(f"warning: {row[-1]}", file=sys.stderr)
    _emit(buf.getvalue(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="liesym",
        description="Index of symmetry of left-invariant metrics on Lie groups (exact arithmetic).",
        epilog=_catalog_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def selector(sp, json_flag=True):
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--catalog", help="catalog group: " + ", ".join(SELECTORS))
        src.add_argument("--file", help="algebra JSON document")
        sp.add_argument("--metric", help="family parameters, e.g. l,m,n=1,2,1")
        if json_flag:
            sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--out", help="write output to PATH instead of stdout")

    for name, fn, text in (
        ("analyze", cmd_analyze, "full symmetry report"),
        ("submersion", cmd_submersion, "Riemannian submersion check for index 1"),
    ):
        sp = sub.add_parser(name, help=text, epilog=_catalog_help(),
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        selector(sp)
        sp.add_argument("--derivative-order", type=int, default=DEFAULT_ORDER, metavar="N",
                        help=f"flow-norm derivatives checked (default {DEFAULT_ORDER})")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("validate", help="check antisymmetry, Jacobi and positive-definiteness")
    selector(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("sweep", help="CSV table over a parameter grid", epilog=_catalog_help(),
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    sp.add_argument("--catalog", required=True)
    sp.add_argument("--grid", action="append", metavar="NAME=v1,v2,...", help="repeat per parameter")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "derivative_order", 1) < 1:
        print("error: --derivative-order must be at least 1", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except CapExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        detail = getattr(err, "violations", None)
        print("error: " + ("\n  - ".join([""] + detail) if detail else str(err)), file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
