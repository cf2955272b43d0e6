"""Command-line front end.

Subcommands: ``table`` (bound grids), ``construct`` (point-set generators and
the lift), ``verify`` (kernel certificates), ``asymptote`` (large-degree
limits), ``tight`` (feasibility dossiers), ``embed`` (2-distance graph
scans).  Exit codes: 0 success or verification pass, 1 verification failure,
2 invalid input.  Relative ``--out`` paths are resolved against the
``HIDESIGN_OUTDIR`` environment variable when it is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional


from . import bounds, designs, tightness
from .designs import InvalidPointSetError, PointSet
from .exactnum import QuadExt
from .orthopoly import KernelSpec, q_roots
from .tightness import GraphFormatError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BADINPUT = 2

OUTDIR_ENV = "HIDESIGN_OUTDIR"


def _parse_range(text: str) -> list[int]:
    """Parse "5" or "3..10" (inclusive)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _resolve_out(path: Optional[str]) -> Optional[Path]:
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get(OUTDIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_BADINPUT


# -- table -------------------------------------------------------------------


def cmd_table(args) -> int:
    try:
        n_values = _parse_range(args.n)
        t_values = _parse_range(args.t)
        if args.even:
            t_values = [t for t in t_values if t % 2 == 0]
        reports = bounds.bound_table(n_values, t_values)
    except ValueError as exc:
        return _fail(str(exc))
    if args.format == "csv":
        _emit(bounds.table_csv(reports), _resolve_out(args.out))
    elif args.format == "json":
        _emit(bounds.table_json(reports), _resolve_out(args.out))
    else:
        _emit(bounds.table_text(reports, truncate=args.truncate), _resolve_out(args.out))
    return EXIT_OK


# -- construct ----------------------------------------------------------------


def cmd_construct(args) -> int:
    try:
        if args.kind == "lift":
            if args.base is None:
                return _fail("lift requires --base FILE")
            base = PointSet.load(args.base)
            n, t = args.n, args.t
            if n is None or t is None:
                return _fail("lift requires --n and --t")
            if n != base.dim + 1:
                return _fail(f"lift target dimension {n} does not match base dimension {base.dim} + 1")
            if args.radius is not None:
                r = args.radius
            else:
                positive = [x for x in q_roots(KernelSpec(n, t)) if x > 0]
                positive.sort(reverse=True)  # index 1 is the largest positive root
                idx = args.root_index
                if idx < 1 or idx > len(positive):
                    return _fail(f"root index {idx} out of range 1..{len(positive)}")
                r = float(positive[idx - 1])
            ps = designs.lift_design(base, t, r, root_tol=args.tol)
        else:
            params = {}
            if args.m is not None:
                params["m"] = args.m
            if args.e is not None:
                params["e"] = args.e
            if args.j is not None:
                params["j"] = args.j
            if args.n is not None:
                params["n"] = args.n
            ps = designs.generate(args.kind, **params)
    except (InvalidPointSetError, ValueError, TypeError, OSError) as exc:
        return _fail(str(exc))
    _emit(ps.to_json(), _resolve_out(args.out))
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        ps = PointSet.load(args.infile)
    except (InvalidPointSetError, OSError) as exc:
        return _fail(str(exc))
    try:
        if args.spherical:
            cert = designs.verify_spherical_design(ps, args.t, tol=args.tol)
        else:
            cert = designs.verify_harmonic_index(ps, args.t, tol=args.tol)
    except ValueError as exc:
        return _fail(str(exc))
    if args.format == "json":
        _emit(json.dumps(cert.as_dict(), indent=2), _resolve_out(args.out))
    else:
        lines = [f"points: {len(ps)}  dim: {ps.dim}  tolerance: {cert.tol:g}"]
        for deg, raw, res, ok in zip(cert.degrees, cert.raw_sums, cert.residuals, cert.passes):
            lines.append(
                f"degree {deg}: kernel sum {format(raw, '.17g')}  "
                f"relative residual {res:.3e}  {'pass' if ok else 'FAIL'}"
            )
        lines.append("verdict: " + ("pass" if cert.passed else "FAIL"))
        _emit("\n".join(lines), _resolve_out(args.out))
    return EXIT_OK if cert.passed else EXIT_FAIL


# -- asymptote ----------------------------------------------------------------


def cmd_asymptote(args) -> int:
    try:
        report = bounds.asymptotic_bound(args.n)
    except ValueError as exc:
        return _fail(str(exc))
    if args.format == "json":
        _emit(json.dumps(report.as_dict(), indent=2), _resolve_out(args.out))
    else:
        cap = args.n * (args.n + 1) // 2
        lines = [
            f"{report.limit:.10g} ({cap})",
            f"first Bessel zero j_{{{(args.n - 1) / 2:g},1}} = {format(report.j1, '.17g')}",
            f"F_n at the zero = {format(report.Fvalue, '.17g')}",
            f"limit of b_{{n,t}} with the Gamma((n-1)/2) factor restored = {report.limit_corrected:.10g}",
        ]
        _emit("\n".join(lines), _resolve_out(args.out))
    return EXIT_OK


# -- tight --------------------------------------------------------------------


def cmd_tight(args) -> int:
    try:
        dossier = tightness.tightness_dossier(args.n)
    except ValueError as exc:
        return _fail(str(exc))
    if args.format == "json":
        _emit(json.dumps(dossier.as_dict(), indent=2), _resolve_out(args.out))
    else:
        lines = [
            f"n = {dossier.n}, t = {dossier.t}",
            f"bound b = {dossier.b_exact} = {format(dossier.b, '.17g')} "
            f"({'integer' if dossier.integral else 'not an integer'})",
            f"tight inner products: +-{dossier.alpha}",
            f"squared distance ratio: {dossier.two_distance_ratio_sq}",
        ]
        if dossier.min_lines is not None:
            lines.append(
                f"equiangular lines: needs >= {dossier.min_lines}, absolute bound {dossier.absolute_bound}"
            )
        if dossier.lrs_k is not None:
            lines.append(f"LRS parameter k = {dossier.lrs_k}, p = {dossier.p}")
        for v in dossier.verdicts:
            lines.append(f"[{v.status:>12}] {v.criterion}: {v.note}")
        lines.append(f"status: {dossier.status}")
        _emit("\n".join(lines), _resolve_out(args.out))
    return EXIT_OK


# -- embed --------------------------------------------------------------------


def cmd_embed(args) -> int:
    try:
        b2 = QuadExt.parse(args.b2)
    except ValueError as exc:
        return _fail(f"--b2: {exc}")
    try:
        if args.json_adjacency:
            graphs = tightness.read_adjacency_json(Path(args.graphs).read_text(encoding="utf-8"))
        else:
            graphs = tightness.read_graph6(args.graphs)
        records = []
        for rec in tightness.scan_graph_corpus(graphs, b2, args.n):
            records.append(rec)
    except (GraphFormatError, ValueError, OSError) as exc:
        return _fail(str(exc))
    ndjson = "\n".join(json.dumps(r.as_dict()) for r in records)
    _emit(ndjson if ndjson else "", _resolve_out(args.out))
    feasible = sum(1 for r in records if r.feasible)
    print(f"scanned {len(records)} graphs, {feasible} feasible", file=sys.stderr)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hidesign",
        description="Harmonic-index spherical designs: bounds, constructions, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="Fisher-type bound grid b_{n,t}")
    p.add_argument("--n", required=True, help='dimension or range, e.g. "5" or "3..10"')
    p.add_argument("--t", required=True, help='degree or range, e.g. "4" or "4..20"')
    p.add_argument("--even", action="store_true", help="keep only even degrees")
    p.add_argument("--truncate", type=int, default=None, metavar="D",
                   help="truncated display with D decimals and '..' suffix")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="write a point-set JSON file")
    p.add_argument("kind", help="generator name (see docs) or 'lift'")
    p.add_argument("--m", type=int, default=None, help="polygon vertex count")
    p.add_argument("--e", type=int, default=None, help="half-degree for the two-point set")
    p.add_argument("--j", type=int, default=None, help="odd angle multiplier for the two-point set")
    p.add_argument("--n", type=int, default=None, help="ambient dimension")
    p.add_argument("--t", type=int, default=None, help="design degree (lift)")
    p.add_argument("--base", default=None, help="base design file (lift)")
    p.add_argument("--root-index", type=int, default=1, dest="root_index",
                   help="1-based index into the positive kernel roots, largest first")
    p.add_argument("--radius", type=float, default=None,
                   help="explicit lift radius; must be a kernel root")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="root-residual tolerance for the lift radius")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="kernel-criterion certificate for a point-set file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--tol", type=float, default=designs.DEFAULT_VERIFY_TOL)
    p.add_argument("--spherical", action="store_true",
                   help="check every degree 1..t (full spherical design)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asymptote", help="large-degree limit of b_{n,t}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_asymptote)

    p = sub.add_parser("tight", help="feasibility dossier for minimum-size degree-4 designs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tight)

    p = sub.add_parser("embed", help="rank-test scan of a 2-distance graph corpus")
    p.add_argument("--graphs", required=True, help="graph6 file (one graph per line)")
    p.add_argument("--json-adjacency", action="store_true",
                   help="read a JSON list of adjacency matrices instead of graph6")
    p.add_argument("--b2", required=True, help='squared distance ratio, e.g. "2" or "(7+√33)/4"')
    p.add_argument("--n", type=int, required=True, help="target dimension")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_embed)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage, which matches our convention
        return int(exc.code) if exc.code is not None else EXIT_BADINPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
