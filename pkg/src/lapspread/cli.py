"""Command-line surface: analyze, table1, sweep, partitions, family.

Exit codes: 0 success, 1 sweep violations, 2 input parse failure,
3 disconnected input without --allow-disconnected.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graphs import (Graph, from_graph6, graph6_str, is_connected,
                     read_edge_list)
from .params import structural_params, srg_verdict
from .spectral import laplacian_spectrum
from .bounds import compute_bounds
from .certify import (certify_graph, certificate_records, certificate_csv,
                      extremal_table, table_csv, TABLE_COLUMNS)
from .sweep import (SweepConfig, validity_sweep, sweep_graph6_stream,
                    partition_sweep)
from .serialize import jsonify
from . import families

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3


def parse_family_spec(spec: str) -> Graph:
    """Family strings: X8, X8c, Y8, Z8, U8, U8c, petersen, complete:n,
    cycle:n, path:n, Kab:a,b, fan:t, KnC:n1,n2,..."""
    name, _, arg = spec.partition(":")
    if name in families.NAMED_GRAPHS:
        return families.named_graph(name)
    if name == "petersen":
        return families.petersen()
    try:
        if name == "Kab":
            a, b = (int(v) for v in arg.split(","))
            return families.complete_bipartite(a, b)
        if name == "fan":
            return families.fan(int(arg))
        if name == "KnC":
            parts = tuple(int(v) for v in arg.split(","))
            return families.kn_minus_cycles(families.CyclePartition(parts))
        if name == "complete":
            return families.complete(int(arg))
        if name == "cycle":
            return families.cycle(int(arg))
        if name == "path":
            return families.path(int(arg))
    except ValueError as exc:
        raise ValueError(f"bad family spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown family {spec!r}")


def build_report(g: Graph, include_vectors: bool = False) -> dict:
    """Full analysis of one connected graph as a JSON-ready dict."""
    params = structural_params(g)
    spectrum = laplacian_spectrum(g)
    bounds = compute_bounds(g, params=params)
    cert = certify_graph(g, params=params, spectrum=spectrum, bound_set=bounds)
    verdict = srg_verdict(g)
    report = {
        "graph": {"graph6": graph6_str(g), "order": g.n, "size": g.m},
        "params": {
            "degrees": params.degrees,
            "avg2": params.avg2,
            "min_degree": params.min_degree,
            "max_degree": params.max_degree,
            "min_common_adjacent": params.min_common_adjacent,
            "min_common_nonadjacent": params.min_common_nonadjacent,
        },
        "spectrum": {"values": spectrum.values},
        "index": cert.index,
        "connectivity": cert.connectivity,
        "spread": cert.spread,
        "bounds": bounds.as_dict(),
        "certificate": {
            "bounds": certificate_records(cert),
            "master_equality": [
                {
                    "eigenvalue": rep.eigenvalue,
                    "multiplicity": len(rep.evidence),
                    "holds_any": rep.holds_any,
                    "holds_all": rep.holds_all,
                }
                for rep in cert.equality
            ],
        },
        "srg": {
            "is_srg": verdict.is_srg,
            "reason": verdict.reason,
            "params": list(verdict.params.as_tuple()) if verdict.params else None,
        },
    }
    if include_vectors:
        report["spectrum"]["vectors"] = spectrum.vectors
    return jsonify(report)


def _load_graph(args) -> Graph:
    if args.family:
        return parse_family_spec(args.family)
    if args.graph6:
        return from_graph6(args.graph6)
    with open(args.edges, "r", encoding="ascii") as fh:
        return read_edge_list(fh.read())


def _cmd_analyze(args) -> int:
    try:
        g = _load_graph(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if not is_connected(g):
        if not args.allow_disconnected:
            print("error: graph is disconnected (use --allow-disconnected)",
                  file=sys.stderr)
            return EXIT_DISCONNECTED
        spectrum = laplacian_spectrum(g)
        report = jsonify({
            "graph": {"graph6": graph6_str(g), "order": g.n, "size": g.m},
            "connected": False,
            "spectrum": {"values": spectrum.values},
        })
        print(json.dumps(report, indent=2))
        return EXIT_OK
    report = build_report(g, include_vectors=args.vectors)
    if args.csv:
        print(certificate_csv(report["certificate"]["bounds"]), end="")
    else:
        print(json.dumps(report, indent=2))
    return EXIT_OK


def _cmd_table1(args) -> int:
    rows = extremal_table(a=args.a, b=args.b, t=args.t)
    if args.csv:
        print(table_csv(rows), end="")
    else:
        print(json.dumps(jsonify([
            dict(zip(TABLE_COLUMNS, (r.graph,) + r.as_tuple())) for r in rows
        ]), indent=2))
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    return (int(lo), int(hi)) if hi else (int(lo), int(lo))


def _cmd_sweep(args) -> int:
    if args.stdin_graph6:
        result = sweep_graph6_stream(sys.stdin)
    elif args.graph6_file:
        with open(args.graph6_file, "r", encoding="ascii") as fh:
            result = sweep_graph6_stream(fh)
    else:
        n_min, n_max = _parse_range(args.n)
        probs = tuple(float(v) for v in args.p.split(","))
        cfg = SweepConfig(n_min=n_min, n_max=n_max, samples=args.samples,
                          edge_probabilities=probs, seed=args.seed)
        result = validity_sweep(cfg)
    print(json.dumps(jsonify(result.to_dict()), indent=2))
    return EXIT_VIOLATIONS if result.violations else EXIT_OK


def _cmd_partitions(args) -> int:
    n_min, n_max = _parse_range(args.n)
    report = partition_sweep(n_min, n_max)
    print(json.dumps(jsonify(report.to_dict()), indent=2))
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def _cmd_family(args) -> int:
    try:
        g = parse_family_spec(args.spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(graph6_str(g))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapspread",
        description="Laplacian eigenvalue bounds and extremal-graph certification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family spec, e.g. X8, Kab:2,5, fan:3, KnC:4,4")
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--edges", help="edge-list file (first line n, then 'i j' lines)")
    p.add_argument("--allow-disconnected", action="store_true")
    p.add_argument("--vectors", action="store_true", help="include eigenvectors")
    p.add_argument("--csv", action="store_true", help="certificate records as CSV")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("table1", help="the extremal-graph summary table")
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--b", type=int, default=5)
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("sweep", help="randomized bound-validity sweep")
    p.add_argument("--n", default="4..12", help="order range, e.g. 4..12")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--p", default="0.3,0.5,0.8", help="edge probabilities")
    p.add_argument("--stdin-graph6", action="store_true",
                   help="check newline-delimited graph6 from stdin instead")
    p.add_argument("--graph6-file", help="check newline-delimited graph6 from a file")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("partitions", help="exhaustive cycle-partition sweep")
    p.add_argument("--n", default="6..12", help="order range, e.g. 6..12")
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("family", help="emit the graph6 of a family member")
    p.add_argument("spec", help="e.g. X8, Y8, Kab:2,5, fan:3, KnC:4,4, petersen")
    p.set_defaults(func=_cmd_family)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
