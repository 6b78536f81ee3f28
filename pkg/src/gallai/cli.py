"""Command-line surface: corpus generation, scanning, per-graph analysis,
subdivision construction, and subdivision verification.

Exit codes: 0 clean, 2 a conjecture check found a violation (witness
emitted), 3 a proven claim was violated (implementation bug), 4 bad
configuration or I/O.
"""

from __future__ import annotations

import argparse
import json
import sys

from .claims import ClaimVerdict
from .generate import MAX_GENERATION_N, generate_connected_graphs
from .graphs import (
    Graph,
    format_edge_list,
    graph_key,
    parse_edge_list,
    parse_graph6_lines,
    to_graph6,
)
from .paths import DEFAULT_PATH_CAP, enumerate_longest_paths
from .scan import (
    ALL_CHECKS,
    EXIT_CONFIG_ERROR,
    EXIT_INTERNAL_VIOLATION,
    EXIT_OK,
    ScanConfig,
    TRIPLE_MODES,
    analyze_one,
    emit_report,
    scan,
    subdivision_sweep,
)
from .subdivision import build_instance, verify_proposition
from .triples import PathTriple
from itertools import combinations


class _Parser(argparse.ArgumentParser):
    # Configuration mistakes must exit 4, not argparse's default 2, which
    # is reserved for conjecture violations.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG_ERROR, f"{self.prog}: error: {message}\n")


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_graphs(path: str, fmt: str) -> list[Graph]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    if fmt == "graph6":
        return parse_graph6_lines(text.splitlines())
    return [parse_edge_list(text)]


def _parse_t_list(value: str) -> tuple[int, ...]:
    try:
        ts = tuple(int(tok) for tok in value.split(",") if tok.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad multiplicity list {value!r}") from None
    if not ts or any(t < 0 for t in ts):
        raise argparse.ArgumentTypeError("multiplicities must be nonnegative integers")
    return ts


def _parse_checks(value: str) -> tuple[str, ...]:
    if value == "all":
        return ALL_CHECKS
    names = tuple(tok for tok in value.split(",") if tok.strip() != "")
    unknown = set(names) - set(ALL_CHECKS)
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown checks {sorted(unknown)}; pick from {', '.join(ALL_CHECKS)} or 'all'"
        )
    return names


def _build_parser() -> _Parser:
    parser = _Parser(prog="gallai", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit all connected graphs on exactly n vertices")
    gen.add_argument("--n", type=int, required=True, metavar="N")
    gen.add_argument("--out", default=None)

    sc = sub.add_parser("scan", help="run claim checks over a corpus")
    src = sc.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int, default=None,
                     help="scan every connected graph on 1..N vertices")
    src.add_argument("--input", default=None, help="graph file, '-' for stdin")
    sc.add_argument("--input-format", choices=("graph6", "edgelist"), default="graph6")
    sc.add_argument("--checks", type=_parse_checks, default=ALL_CHECKS,
                    help="comma-separated check names, or 'all'")
    sc.add_argument("--triple-mode", choices=TRIPLE_MODES, default="shortcut-first")
    sc.add_argument("--triple-cap", type=int, default=100_000)
    sc.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP,
                    help="longest-path enumeration cap")
    sc.add_argument("--t", type=_parse_t_list, default=(),
                    help="run subdivision checks at these multiplicities")
    sc.add_argument("--jobs", type=int, default=1)
    sc.add_argument("--strict-t-convention", action="store_true",
                    help="count only crossings with at least two vertices")
    sc.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sc.add_argument("--out", default=None)

    an = sub.add_parser("analyze", help="full per-triple analysis of each input graph")
    an.add_argument("--input", required=True, help="graph file, '-' for stdin")
    an.add_argument("--input-format", choices=("graph6", "edgelist"), default="graph6")
    an.add_argument("--checks", type=_parse_checks, default=ALL_CHECKS)
    an.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)
    an.add_argument("--triple-cap", type=int, default=100_000)
    an.add_argument("--t", type=_parse_t_list, default=())
    an.add_argument("--strict-t-convention", action="store_true")
    an.add_argument("--hypotraceable", action="store_true",
                    help="also run the exact hypotraceability check")
    an.add_argument("--format", choices=("json", "text"), default="json")
    an.add_argument("--out", default=None)

    sd = sub.add_parser(
        "subdivide",
        help="build the pendant extension and t-fold subdivision for a longest-path triple",
    )
    sd.add_argument("--input", required=True, help="graph file, '-' for stdin")
    sd.add_argument("--input-format", choices=("graph6", "edgelist"), default="graph6")
    sd.add_argument("--t", type=int, required=True)
    sd.add_argument("--triple", type=int, default=0,
                    help="index of the triple in canonical order (default first)")
    sd.add_argument("--format", choices=("json", "edgelist"), default="json")
    sd.add_argument("--out", default=None)

    vp = sub.add_parser(
        "verify-prop",
        help="brute-force the subdivision scaling claim over triples",
    )
    vsrc = vp.add_mutually_exclusive_group(required=True)
    vsrc.add_argument("--n", type=int, default=None,
                      help="sweep every connected graph on 1..N vertices")
    vsrc.add_argument("--input", default=None, help="graph file, '-' for stdin")
    vp.add_argument("--input-format", choices=("graph6", "edgelist"), default="graph6")
    vp.add_argument("--t", type=_parse_t_list, required=True)
    vp.add_argument("--triple-cap", type=int, default=None,
                    help="verify at most this many triples per graph "
                         "(required sanity for n >= 6 sweeps)")
    vp.add_argument("--out", default=None)
    return parser


def _cmd_gen(args) -> int:
    if not 1 <= args.n <= MAX_GENERATION_N:
        sys.stderr.write(f"gen: --n must be within 1..{MAX_GENERATION_N}\n")
        return EXIT_CONFIG_ERROR
    if args.n == 8:
        sys.stderr.write("gen: n=8 checks 134k candidate labellings; expect ~15s\n")
    lines = [to_graph6(g) for g in generate_connected_graphs(args.n)]
    _write_out("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


def _cmd_scan(args) -> int:
    if args.n == 8:
        sys.stderr.write("scan: n=8 adds 11117 graphs; generation takes ~15s\n")
    config = ScanConfig(
        generate_n=args.n,
        input_path=args.input,
        input_format=args.input_format,
        checks=args.checks,
        triple_mode=args.triple_mode,
        triple_cap=args.triple_cap,
        enumeration_cap=args.cap,
        subdivision_t=args.t,
        jobs=args.jobs,
        strict_t=args.strict_t_convention,
    )
    report = scan(config)
    _write_out(emit_report(report, args.format), args.out)
    return report.exit_code


def _cmd_analyze(args) -> int:
    graphs = _read_graphs(args.input, args.input_format)
    results = [
        analyze_one(
            g,
            checks=args.checks,
            enumeration_cap=args.cap,
            triple_cap=args.triple_cap,
            subdivision_t=args.t,
            strict_t=args.strict_t_convention,
            hypotraceable=args.hypotraceable,
        )
        for g in graphs
    ]
    if args.format == "json":
        _write_out(json.dumps(results, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = []
        for res in results:
            lines.append(f"graph {res['graph6']}: n={res['n']} m={res['m']} "
                         f"status={res['status']}")
            if "l" in res:
                lines.append(f"  l={res['l']} longest={res.get('num_longest')} "
                             f"gallai={res.get('gallai_vertices')}")
            for entry in res.get("triples", []):
                lines.append(f"  triple {entry['paths']}: f={entry['f']} "
                             f"t_counts={entry['t_counts']} x={entry['x_sizes']}")
        _write_out("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _export_graph(graph: Graph) -> dict:
    entry: dict = {"n": graph.n, "m": graph.m}
    if graph.n <= 62:
        entry["graph6"] = to_graph6(graph)
    else:
        entry["edge_list"] = format_edge_list(graph)
    return entry


def _cmd_subdivide(args) -> int:
    if args.t < 0 or args.triple < 0:
        sys.stderr.write("subdivide: --t and --triple must be nonnegative\n")
        return EXIT_CONFIG_ERROR
    graphs = _read_graphs(args.input, args.input_format)
    results = []
    built: list[Graph | None] = []
    for graph in graphs:
        lp = enumerate_longest_paths(graph)
        combos = list(combinations(lp.paths, 3))
        if args.triple >= len(combos):
            results.append(
                {
                    "graph6": graph_key(graph),
                    "status": "vacuous",
                    "triples_total": len(combos),
                }
            )
            built.append(None)
            continue
        triple = PathTriple(combos[args.triple])
        inst = build_instance(graph, triple, args.t)
        built.append(inst.graph)
        results.append(
            {
                "graph6": graph_key(graph),
                "status": "ok",
                "t": args.t,
                "triple": [list(p.vertices) for p in triple.paths],
                "extended": _export_graph(inst.source),
                "subdivided": _export_graph(inst.graph),
                "lifted_paths": [list(p.vertices) for p in inst.paths],
                "provenance_counts": {
                    kind: sum(1 for o in inst.provenance if o.kind == kind)
                    for kind in ("original", "pendant", "subdivision")
                },
            }
        )
    if args.format == "json":
        _write_out(json.dumps(results, indent=2, sort_keys=True) + "\n", args.out)
    else:
        chunks = []
        for res, sub in zip(results, built):
            if sub is None:
                chunks.append(f"# {res['graph6']}: {res['status']}\n")
            else:
                chunks.append(format_edge_list(sub))
        _write_out("".join(chunks), args.out)
    return EXIT_OK


def _cmd_verify_prop(args) -> int:
    if args.triple_cap is not None and args.triple_cap < 1:
        sys.stderr.write("verify-prop: --triple-cap must be at least 1\n")
        return EXIT_CONFIG_ERROR
    if args.n is not None:
        if not 1 <= args.n <= MAX_GENERATION_N:
            sys.stderr.write(f"verify-prop: --n must be within 1..{MAX_GENERATION_N}\n")
            return EXIT_CONFIG_ERROR
        if args.n >= 6 and args.triple_cap is None:
            sys.stderr.write(
                "verify-prop: sweeps beyond n=5 have millions of triples; "
                "set --triple-cap\n"
            )
            return EXIT_CONFIG_ERROR
        result = subdivision_sweep(args.n, args.t, triple_cap=args.triple_cap)
        _write_out(json.dumps(result, indent=2, sort_keys=True) + "\n", args.out)
        return EXIT_OK if not result["violations"] else EXIT_INTERNAL_VIOLATION
    graphs = _read_graphs(args.input, args.input_format)
    results = []
    worst_status = EXIT_OK
    for graph in graphs:
        lp = enumerate_longest_paths(graph)
        verdicts: list[dict] = []
        examined = 0
        for combo in combinations(lp.paths, 3):
            if args.triple_cap is not None and examined >= args.triple_cap:
                break
            examined += 1
            triple = PathTriple(combo)
            for t in args.t:
                v: ClaimVerdict = verify_proposition(graph, triple, t, longest_paths=lp)
                verdicts.append(
                    {
                        "t": t,
                        "paths": [list(p.vertices) for p in triple.paths],
                        "status": v.status,
                        "witness": v.witness,
                    }
                )
                if v.status == "violated":
                    worst_status = EXIT_INTERNAL_VIOLATION
        results.append({"graph6": graph_key(graph), "verdicts": verdicts})
    _write_out(json.dumps(results, indent=2, sort_keys=True) + "\n", args.out)
    return worst_status


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits itself on --help and usage errors; surface the
        # code instead so callers always get an int back.
        return int(exc.code or 0)
    handlers = {
        "gen": _cmd_gen,
        "scan": _cmd_scan,
        "analyze": _cmd_analyze,
        "subdivide": _cmd_subdivide,
        "verify-prop": _cmd_verify_prop,
    }
    try:
        return handlers[args.command](args)
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"gallai: error: {exc}\n")
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
