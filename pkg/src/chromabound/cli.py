"""chromabound command line: poly, bounds, roots, scan, table.

Exit codes: 0 clean, 2 a bound/conjecture violation or containment failure
was found, 1 operational error (bad input, unreadable corpus).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from .bounds import (
    BoundReport,
    comparison_table,
    reports_to_csv,
    root_discs,
    table_rows,
)
from .chrompoly import a_sequence, chromatic_number, chromatic_polynomial
from .graph import Graph, Graph6Error, parse_graph6, read_graph6_lines
from .lab import (
    CHECKS,
    VIOLATED,
    CorpusError,
    GraphFilter,
    extremal_search,
    iter_corpus,
    scan_corpus,
    summarize,
)
from .roots import RootFindingError, find_roots, verify_containment

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


def parse_xs(values: Optional[Sequence[str]]) -> list[int]:
    """Accepts ``--x 3 --x 4``, ``--x 3,4`` and ranges ``--x 4..9``."""
    out: list[int] = []
    for raw in values or ():
        for part in raw.split(","):
            part = part.strip()
            if not part:
                continue
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    return out


def _inputs(args) -> list[tuple[str, Graph]]:
    if (args.graph is None) == (args.file is None):
        raise ValueError("give exactly one input: an inline graph6 string or --file")
    if args.graph is not None:
        g = parse_graph6(args.graph)
        return [(args.graph.strip(), g)]
    with open(args.file, encoding="ascii") as fh:
        return [(gid, g) for _, gid, g in read_graph6_lines(fh)]


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------- poly

def cmd_poly(args) -> int:
    xs = parse_xs(args.x)
    records = []
    for gid, g in _inputs(args):
        p = chromatic_polynomial(g)
        a = a_sequence(g, p)
        records.append({
            "id": gid, "n": g.n, "m": g.m, "chi": a.chi,
            "coeffs": [str(c) for c in p.coeffs],
            "a": [str(v) for v in a.values],
            "values": {str(x): str(p(x)) for x in xs},
            "poly": str(p),
        })
    if args.format == "json":
        _emit("\n".join(json.dumps(r, sort_keys=True) for r in records))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "n", "m", "chi", "coeffs", "a"] + [f"P({x})" for x in xs])
        for r in records:
            w.writerow([r["id"], r["n"], r["m"], r["chi"], " ".join(r["coeffs"]), " ".join(r["a"])]
                       + [r["values"][str(x)] for x in xs])
        _emit(buf.getvalue())
    else:
        for r in records:
            lines = [
                f"graph {r['id']}  n={r['n']} m={r['m']} chi={r['chi']}",
                f"  P(x) = {r['poly']}",
                f"  coeffs (x^0..x^n) = [{', '.join(r['coeffs'])}]",
                f"  a (i=1..n) = <{', '.join(r['a'])}>",
            ]
            lines += [f"  P({x}) = {v}" for x, v in r["values"].items()]
            _emit("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------- bounds

def _report_text(r: BoundReport) -> str:
    thr = "n/a (k < 4)" if r.threshold is None else str(r.threshold)
    lines = [
        f"graph {r.id}  n={r.n} m={r.m} k={r.k} delta={r.delta}",
        f"  P({r.x}) = {r.count}",
        f"  tomescu bound      = {r.tomescu}",
        f"  improved bound     = {r.improved}",
        f"  modulus bound      = {r.modulus:.6f}",
        f"  sokal bound        = {r.sokal:.6f}",
        f"  fernandez-procacci = {r.fp:.6f}",
        f"  large-x threshold  = {thr}",
    ]
    if r.max_root_modulus is not None:
        lines.append(f"  max |root|         = {r.max_root_modulus:.6f}")
    lines.append("  satisfied: " + ", ".join(f"{k}={'yes' if v else 'NO'}" for k, v in r.satisfied.items()))
    return "\n".join(lines)


def cmd_bounds(args) -> int:
    xs = parse_xs(args.x)
    if len(xs) > 1:
        raise ValueError("bounds takes a single --x value")
    x = xs[0] if xs else None
    reports = [comparison_table(g, x=x, graph_id=gid) for gid, g in _inputs(args)]
    if args.format == "json":
        _emit("\n".join(json.dumps(r.to_json(), sort_keys=True) for r in reports))
    elif args.format == "csv":
        _emit(reports_to_csv(reports))
    else:
        _emit("\n".join(_report_text(r) for r in reports))
    return EXIT_OK if all(all(r.satisfied.values()) for r in reports) else EXIT_VIOLATION


# ---------------------------------------------------------------- roots

def cmd_roots(args) -> int:
    status = EXIT_OK
    out = []
    for gid, g in _inputs(args):
        p = chromatic_polynomial(g)
        k = chromatic_number(g, p)
        rs = find_roots(p, k)
        ds = root_discs(g, k, a_sequence(g, p), tight=args.tight)
        if args.radius_scale != 1.0:
            ds = ds.scaled(args.radius_scale)
        rep = verify_containment(rs, ds, args.tol)
        if not rep.ok:
            status = EXIT_VIOLATION
        out.append({"id": gid, "roots": rs.to_json(), "discs": ds.to_json(), "containment": rep.to_json()})
    if args.format == "json":
        _emit("\n".join(json.dumps(o, sort_keys=True) for o in out))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "re", "im", "residual"])
        for o in out:
            for r in o["roots"]:
                w.writerow([o["id"], repr(r["re"]), repr(r["im"]), repr(r["residual"])])
        _emit(buf.getvalue())
    else:
        for o in out:
            c = o["containment"]
            lines = [f"graph {o['id']}"]
            lines += [f"  root {r['re']:+.12f} {r['im']:+.12f}i  residual {r['residual']:.2e}" for r in o["roots"]]
            d = o["discs"]
            lines.append(f"  integer roots {d['integer_roots']}; centers {d['centers']}; radius {d['radius']:.6f}")
            lines.append(f"  contained: {'yes' if c['contained'] else 'NO'} ({len(c['violations'])} violations)")
            lines += [f"    outside: {v['re']:+.9f} {v['im']:+.9f}i by {v['distance']:.3e}" for v in c["violations"]]
            _emit("\n".join(lines))
    return status


# ---------------------------------------------------------------- scan

def cmd_scan(args) -> int:
    xs = parse_xs(args.x)
    flt = GraphFilter(args.filter_order, args.filter_chromatic, args.filter_connectivity)
    if args.extremal:
        if len(xs) != 1:
            raise ValueError("--extremal needs exactly one --x value")
        res = extremal_search(iter_corpus(args.corpus), xs[0], flt)
        if args.format == "json":
            _emit(json.dumps(res.to_json(), sort_keys=True))
        else:
            lines = [f"{res.constraint}: {res.considered} graphs, x={res.x}",
                     f"  max colourings = {res.max_count}"]
            lines += [f"  argmax {gid}  a=<{', '.join(map(str, res.a_sequences[gid].nonzero_tail()))}>"
                      for gid in res.argmax]
            _emit("\n".join(lines))
        return EXIT_OK

    checks = args.check or sorted(CHECKS)
    if not xs:
        raise ValueError("scan needs at least one --x value")
    findings = list(scan_corpus(args.corpus, checks, xs, flt, jobs=args.jobs))
    summary = summarize(findings)
    violated = any(f.status == VIOLATED for f in findings)
    if args.format == "json":
        lines = [f.dumps() for f in findings]
        lines.append(json.dumps({"summary": summary}, sort_keys=True))
        _emit("\n".join(lines))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "holds", "equality", "violated", "inapplicable"])
        for check, counts in summary.items():
            w.writerow([check, counts["holds"], counts["equality"], counts["violated"], counts["inapplicable"]])
        _emit(buf.getvalue())
    else:
        lines = []
        for f in findings:
            if f.status == VIOLATED:
                lines.append(f"VIOLATION {f.check} {f.graph_id} {json.dumps(f.witness, sort_keys=True)} {f.note}")
        for check, counts in summary.items():
            lines.append(f"{check}: " + " ".join(f"{s}={c}" for s, c in counts.items()))
        _emit("\n".join(lines) if lines else "no graphs scanned")
    if violated:
        print("violation found: see witnesses above (re-verify with the stored graph6 ids)", file=sys.stderr)
    return EXIT_VIOLATION if violated else EXIT_OK


# ---------------------------------------------------------------- table

def cmd_table(args) -> int:
    rows = table_rows(args.n)
    if args.format == "json":
        _emit(json.dumps([r.to_json() for r in rows], indent=2, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "n", "m", "delta", "sokal", "fp", "modulus",
                    "delta_offset", "modulus_slope", "modulus_intercept"])
        for r in rows:
            w.writerow([r.family, r.n, r.m, r.delta, f"{r.sokal:.3f}", f"{r.fp:.3f}", f"{r.modulus:.3f}",
                        r.delta_offset, f"{r.slope:.3f}", f"{r.intercept:.3f}"])
        _emit(buf.getvalue())
    else:
        lines = [f"{'complement of':<14}{'sokal':>22}{'fernandez-procacci':>22}{'new bound':>22}"]
        for r in rows:
            lines.append(
                f"{r.family:<14}{f'7.964(n-{r.delta_offset}) = {r.sokal:.3f}':>22}"
                f"{f'6.908(n-{r.delta_offset}) = {r.fp:.3f}':>22}"
                f"{f'{r.slope:.3f}n{r.intercept:+.3f} = {r.modulus:.3f}':>22}"
            )
        _emit("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------- entry

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromabound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, inputs=True):
        if inputs:
            p.add_argument("graph", nargs="?", help="inline graph6 string")
            p.add_argument("--file", help="graph6 file, one graph per line")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("poly", help="chromatic polynomial, a-sequence, chromatic number")
    common(p)
    p.add_argument("--x", action="append", help="evaluation points (3,4 or 4..9; repeatable)")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("bounds", help="full bound comparison for each graph")
    common(p)
    p.add_argument("--x", action="append", help="evaluation point for the counting bounds (default n)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("roots", help="chromatic roots and disc containment")
    common(p)
    p.add_argument("--tol", type=float, default=None, help="containment tolerance (default 1e-9*(1+radius))")
    p.add_argument("--tight", action="store_true", help="use the per-graph Cauchy radius")
    p.add_argument("--radius-scale", type=float, default=1.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("scan", help="run checks or extremal search over a graph6 corpus")
    p.add_argument("corpus", help="graph6 file, or a corpus name such as connected7")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--check", action="append", choices=sorted(CHECKS))
    p.add_argument("--x", action="append")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--filter-order", type=int)
    p.add_argument("--filter-chromatic", type=int)
    p.add_argument("--filter-connectivity", type=int)
    p.add_argument("--extremal", action="store_true", help="report the graphs with most x-colourings")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("table", help="root-modulus bounds for dense complement families")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, CorpusError, Graph6Error, RootFindingError) as exc:
        print(f"chromabound: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
