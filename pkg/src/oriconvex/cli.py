"""Command-line front end: invariants, orient, verify, classify.

Everything printed on stdout is derived deterministically from the input
and the flags; timing and diagnostics go to stderr.  Exit codes: 0 all
checks pass, 1 a theorem check failed, 2 input or usage trouble.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from .graphs import (
    DEFAULT_EDGE_BUDGET,
    EdgeBudgetError,
    Graph,
    GraphFormatError,
    encode_graph6,
    is_complete,
    parse_arc_list,
    parse_edge_list,
    parse_graph6,
)
from . import geodesic
from .invariants import digraph_report, geodetic_number, hull_number, orientable_numbers
from .orienters import (
    complete_graph_orientations,
    d1_from_d2,
    d2_construction,
    extreme_free_orientation,
)
from .verifier import corpus_run

_SUP = {"g_min": "g⁻", "g_max": "g⁺", "h_min": "h⁻", "h_max": "h⁺",
        "con_min": "con⁻", "con_max": "con⁺"}


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _input_graphs(args) -> list[Graph]:
    if args.edges is not None:
        text = sys.stdin.read() if args.edges == "-" else args.edges
        return [parse_edge_list(text.replace("\\n", "\n"))]
    if args.input is None:
        raise GraphFormatError("no input given: use --input or --edges")
    lines = _read_source(args.input).splitlines()
    graphs = [parse_graph6(ln) for ln in lines if ln.strip()]
    if not graphs:
        raise GraphFormatError("no graphs in input")
    return graphs


def _arcs_str(d) -> str:
    return " ".join(f"{u}->{v}" for u, v in d.arcs)


def _numbers_line(values: dict[str, int]) -> str:
    return " ".join(f"{_SUP[k]}={values[k]}" for k in
                    ("g_min", "g_max", "h_min", "h_max", "con_min", "con_max"))


def cmd_invariants(args) -> int:
    out = sys.stdout
    if args.arcs is not None:
        text = sys.stdin.read() if args.arcs == "-" else args.arcs
        d = parse_arc_list(text.replace("\\n", "\n"))
        rep = digraph_report(d)
        if args.format == "json":
            json.dump(rep.to_json_dict(), out)
            out.write("\n")
        elif args.format == "csv":
            w = csv.writer(out)
            w.writerow(["n", "g", "h", "con"])
            w.writerow([rep.n, rep.g, rep.h, rep.con])
        else:
            out.write(f"digraph on {rep.n} vertices: g={rep.g} h={rep.h} con={rep.con}\n")
            out.write(f"  geodetic witness: {set(rep.geodetic_witness)}\n")
            out.write(f"  hull witness: {set(rep.hull_witness)}\n")
            out.write(f"  convexity witness: {set(rep.convexity_witness)}\n")
        return 0

    graphs = _input_graphs(args)
    csv_writer = None
    if args.format == "csv":
        csv_writer = csv.writer(out)
        csv_writer.writerow(
            ["graph", "n", "m", "g_min", "g_max", "h_min", "h_max", "con_min", "con_max"]
        )
    for g in graphs:
        gid = encode_graph6(g)
        t0 = time.perf_counter()
        nums = orientable_numbers(
            g,
            use_reversal_symmetry=args.symmetry,
            edge_budget=args.budget,
            workers=args.workers,
        )
        print(f"{gid}: {time.perf_counter() - t0:.2f}s", file=sys.stderr)
        if args.format == "json":
            rec = nums.to_json_dict()
            rec["graph"] = gid
            json.dump(rec, out)
            out.write("\n")
        elif csv_writer is not None:
            v = nums.values()
            csv_writer.writerow([gid, g.n, g.m] + [v[k] for k in
                                ("g_min", "g_max", "h_min", "h_max", "con_min", "con_max")])
        else:
            out.write(f"{gid} (n={g.n} m={g.m}): {_numbers_line(nums.values())}\n")
            for key in ("g_min", "g_max", "h_min", "h_max", "con_min", "con_max"):
                wit = getattr(nums, key + "_witness")
                out.write(f"  {_SUP[key]} witness: {_arcs_str(wit)}\n")
    return 0


def cmd_orient(args) -> int:
    out = sys.stdout
    if args.mode == "complete":
        if args.n is not None:
            n = args.n
        else:
            g = _input_graphs(args)[0]
            if not is_complete(g):
                return _fail("orient complete needs a complete graph (or --n)", 2)
            n = g.n
        if n < 3:
            return _fail("orient complete needs n >= 3", 2)
        d_max, d_min = complete_graph_orientations(n)
        g_hi, _ = geodetic_number(d_max)
        g_lo, wit = geodetic_number(d_min)
        if args.format == "json":
            json.dump(
                {
                    "transitive": [list(a) for a in d_max.arcs],
                    "reversed_path": [list(a) for a in d_min.arcs],
                    "g_transitive": g_hi,
                    "g_reversed_path": g_lo,
                },
                out,
            )
            out.write("\n")
        else:
            out.write(f"transitive tournament: {_arcs_str(d_max)}\n")
            out.write(f"reversed-path tournament: {_arcs_str(d_min)}\n")
            out.write(
                f"self-check: g(transitive)={g_hi}, g(reversed-path)={g_lo}, "
                f"witness {set(wit)}\n"
            )
        return 0

    g = _input_graphs(args)[0]
    if args.mode == "extreme-free":
        try:
            d = extreme_free_orientation(g)
        except ValueError as exc:
            return _fail(str(exc), 2)
        extremes = geodesic.extreme_vertices(d)
        if args.format == "json":
            json.dump(
                {"arcs": [list(a) for a in d.arcs], "extreme_vertices": sorted(extremes)},
                out,
            )
            out.write("\n")
        else:
            out.write(f"orientation: {_arcs_str(d)}\n")
            out.write(f"self-check: {len(extremes)} extreme vertices\n")
        return 0

    # d1d2
    try:
        d2, sel = d2_construction(g)
    except ValueError as exc:
        return _fail(str(exc), 2)
    d1 = d1_from_d2(d2, sel)
    g1, _ = geodetic_number(d1)
    g2, _ = geodetic_number(d2)
    h1, _ = hull_number(d1)
    h2, _ = hull_number(d2)
    if args.format == "json":
        json.dump(
            {
                "selection": sel.to_json_dict(),
                "d2": [list(a) for a in d2.arcs],
                "d1": [list(a) for a in d1.arcs],
                "g_d1": g1,
                "g_d2": g2,
                "h_d1": h1,
                "h_d2": h2,
            },
            out,
        )
        out.write("\n")
    else:
        out.write(f"induced path: {sel.v0}-{sel.v1}-{sel.v2}\n")
        out.write(f"D2: {_arcs_str(d2)}\n")
        out.write(f"D1: {_arcs_str(d1)}\n")
        out.write(
            f"self-check: v1={sel.v1} is a sink of D2; "
            f"g(D1)={g1} < g(D2)={g2}, h(D1)={h1} < h(D2)={h2}\n"
        )
    return 0


def _emit_corpus(report, fmt, out) -> None:
    if fmt == "json":
        for rec in report.records:
            json.dump(rec.to_json_dict(), out)
            out.write("\n")
        json.dump({"summary": report.summary()}, out)
        out.write("\n")
        return
    if fmt == "csv":
        w = csv.writer(out)
        w.writerow(["line", "graph", "status", "ok", "case", "g_min", "g_max",
                    "h_min", "h_max", "con_min", "con_max"])
        for rec in report.records:
            cls = rec.classification
            nums = None
            if rec.separation is not None:
                nums = rec.separation.numbers.values()
            elif cls is not None:
                nums = {k: getattr(cls, k) for k in
                        ("g_min", "g_max", "h_min", "h_max", "con_min", "con_max")}
            row = [rec.line, rec.text, rec.status, rec.ok, cls.case if cls else ""]
            row += [nums[k] for k in ("g_min", "g_max", "h_min", "h_max",
                                      "con_min", "con_max")] if nums else [""] * 6
            w.writerow(row)
        return
    for rec in report.records:
        if rec.status != "ok":
            out.write(f"line {rec.line} ({rec.text}): {rec.status}: {rec.reason}\n")
            continue
        bits = []
        if rec.separation is not None:
            n = rec.separation.numbers
            bits.append(
                f"g⁻={n.g_min}<g⁺={n.g_max} h⁻={n.h_min}<h⁺={n.h_max} "
                f"route={rec.separation.route}"
            )
        if rec.convexity is not None:
            bits.append(f"con⁻={rec.convexity.con_min} con⁺={rec.convexity.con_max}")
        if rec.classification is not None:
            bits.append(f"case={rec.classification.case}")
        status = "pass" if rec.ok else "FAIL"
        out.write(f"{rec.text}: {status} {' '.join(bits)}\n")
        for rep in (rec.separation, rec.convexity):
            if rep is not None:
                for f in rep.failures:
                    out.write(f"  FAIL {f.check}: {f.message}\n")
    summary = report.summary()
    out.write("summary: " + json.dumps(summary) + "\n")


def cmd_verify(args) -> int:
    try:
        t0 = time.perf_counter()
        report = corpus_run(
            args.corpus,
            suite=args.suite,
            edge_budget=args.budget,
            use_reversal_symmetry=args.symmetry,
            workers=args.workers,
        )
    except OSError as exc:
        return _fail(str(exc), 2)
    print(f"{len(report.records)} lines in {time.perf_counter() - t0:.2f}s",
          file=sys.stderr)
    _emit_corpus(report, args.format, sys.stdout)
    return report.exit_status()


def cmd_classify(args) -> int:
    try:
        report = corpus_run(
            args.corpus,
            suite="classify",
            edge_budget=args.budget,
            use_reversal_symmetry=args.symmetry,
            workers=args.workers,
        )
    except OSError as exc:
        return _fail(str(exc), 2)
    _emit_corpus(report, args.format, sys.stdout)
    return report.exit_status()


def _add_input_options(p, with_arcs=False):
    p.add_argument("--input", help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--edges", help="inline edge list: 'n' then 'u v' pairs ('-' for stdin)")
    if with_arcs:
        p.add_argument("--arcs", help="inline arc list for a digraph ('-' for stdin)")


def _add_common(p):
    p.add_argument("--budget", type=int, default=DEFAULT_EDGE_BUDGET,
                   help="edge budget guarding the 2^m enumeration (default %(default)s)")
    p.add_argument("--symmetry", action=argparse.BooleanOptionalAction, default=True,
                   help="halve the sweep using reversal symmetry (default on)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes for orientation/corpus fan-out")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="oriconvex",
        description="Geodetic, hull and convexity numbers over digraph orientations",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="six orientable numbers of a graph, "
                       "or g/h/con of a digraph")
    _add_input_options(p, with_arcs=True)
    _add_common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("orient", help="run a constructive orientation")
    p.add_argument("mode", choices=("extreme-free", "d1d2", "complete"))
    _add_input_options(p)
    p.add_argument("--n", type=int, help="order of the complete graph (mode complete)")
    _add_common(p)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("verify", help="run theorem suites over a graph6 corpus")
    p.add_argument("corpus", help="graph6 file ('-' reads stdin)")
    p.add_argument("--suite", choices=("separation", "convexity", "classify", "all"),
                   default="all")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="h/g case classification over a corpus")
    p.add_argument("corpus", help="graph6 file ('-' reads stdin)")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    budget = getattr(args, "budget", DEFAULT_EDGE_BUDGET)
    if budget > DEFAULT_EDGE_BUDGET:
        print(
            f"warning: edge budget {budget} allows up to 2^{budget} "
            f"orientations per graph; expect long sweeps",
            file=sys.stderr,
        )
    if args.command in ("verify", "classify") and args.corpus == "-":
        args.corpus = sys.stdin.read().splitlines()
    try:
        return args.func(args)
    except GraphFormatError as exc:
        return _fail(str(exc), 2)
    except EdgeBudgetError as exc:
        return _fail(str(exc), 2)
    except FileNotFoundError as exc:
        return _fail(str(exc), 2)
    except ValueError as exc:
        return _fail(str(exc), 2)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
