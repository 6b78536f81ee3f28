"""Corpus scanning, single-graph analysis, and report emission.

A scan walks a corpus of connected graphs, enumerates each graph's longest
paths, and evaluates the enabled claim checks on path pairs and triples.
The default triple mode applies a sound shortcut: when some vertex lies on
every longest path, every pair and triple trivially intersects there, so
per-triple work is skipped and the graph is recorded as such. Graphs whose
longest paths have empty common intersection (none exist at these corpus
sizes) fall through to explicit triple iteration.

Reports are deterministic: graphs are keyed and ordered by their graph6
encoding, triples iterate in canonical sorted order, and the JSON form
carries no timing or worker-count information, so runs with different
parallelism are byte-identical. Wall-clock timing appears only in the
human-readable text rendering.
"""

from __future__ import annotations

import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from multiprocessing import get_context

from .claims import (
    PROVEN_CLAIMS,
    VIOLATED,
    ClaimVerdict,
    check_case_bounds,
    check_conjecture4,
    check_conjecture_z,
    check_lemma21,
    check_lemma22,
    check_lemma23,
    check_prop1,
    check_theorem1,
    gallai_vertex_set,
    is_hypotraceable,
)
from .generate import MAX_GENERATION_N, generate_connected_graphs
from .graphs import (
    Graph,
    graph_key,
    is_connected,
    parse_edge_list,
    parse_graph6_lines,
)
from .paths import BudgetError, DEFAULT_PATH_CAP, enumerate_longest_paths
from .subdivision import check_size_bound, verify_proposition
from .triples import PathTriple, analyze_triple

SCHEMA_VERSION = 1

ALL_CHECKS = (
    "prop1",
    "conj_Z",
    "lemma21",
    "lemma22",
    "lemma23",
    "thm1",
    "case_bounds",
    "conj4",
)

TRIPLE_MODES = ("shortcut-first", "all", "capped")

_TRIPLE_CHECKERS = {
    "conj_Z": check_conjecture_z,
    "lemma21": check_lemma21,
    "lemma22": check_lemma22,
    "lemma23": check_lemma23,
    "thm1": check_theorem1,
    "case_bounds": check_case_bounds,
    "conj4": check_conjecture4,
}

EXIT_OK = 0
EXIT_CONJECTURE_VIOLATION = 2
EXIT_INTERNAL_VIOLATION = 3
EXIT_CONFIG_ERROR = 4


@dataclass(frozen=True)
class ScanConfig:
    """What to scan and how hard to look.

    Exactly one of ``generate_n`` (scan every connected graph on 1..n
    vertices) and ``input_path`` must be given. ``subdivision_t`` adds the
    subdivision checks at those multiplicities to every examined triple.
    """

    generate_n: int | None = None
    input_path: str | None = None
    input_format: str = "graph6"
    checks: tuple[str, ...] = ALL_CHECKS
    triple_mode: str = "shortcut-first"
    triple_cap: int = 100_000
    enumeration_cap: int = DEFAULT_PATH_CAP
    subdivision_t: tuple[int, ...] = ()
    jobs: int = 1
    strict_t: bool = False

    def __post_init__(self):
        if (self.generate_n is None) == (self.input_path is None):
            raise ValueError("exactly one of generate_n and input_path is required")
        if self.generate_n is not None and not 1 <= self.generate_n <= MAX_GENERATION_N:
            raise ValueError(f"generate_n must be within 1..{MAX_GENERATION_N}")
        if self.input_format not in ("graph6", "edgelist"):
            raise ValueError("input_format must be 'graph6' or 'edgelist'")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.triple_mode not in TRIPLE_MODES:
            raise ValueError(f"triple_mode must be one of {TRIPLE_MODES}")
        if self.triple_cap < 1 or self.enumeration_cap < 1:
            raise ValueError("caps must be at least 1")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if any(t < 0 for t in self.subdivision_t):
            raise ValueError("subdivision multiplicities must be nonnegative")


@dataclass
class GraphRecord:
    """Everything the scan learned about one graph."""

    graph6: str
    n: int
    m: int
    status: str
    l: int | None = None
    num_longest: int | None = None
    truncated: bool = False
    gallai_size: int | None = None
    triples_total: int | None = None
    triples_examined: int = 0
    triples_skipped: int = 0
    pairs_examined: int = 0
    max_f: int | None = None
    min_t: int | None = None
    tallies: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "status": self.status,
            "l": self.l,
            "num_longest": self.num_longest,
            "truncated": self.truncated,
            "gallai_size": self.gallai_size,
            "triples_total": self.triples_total,
            "triples_examined": self.triples_examined,
            "triples_skipped": self.triples_skipped,
            "pairs_examined": self.pairs_examined,
            "max_f": self.max_f,
            "min_t": self.min_t,
            "tallies": self.tallies,
        }


@dataclass
class ViolationRecord:
    graph6: str
    claim: str
    witness: dict

    def to_json(self) -> dict:
        return {"graph6": self.graph6, "claim": self.claim, "witness": self.witness}


@dataclass
class ScanReport:
    """Aggregate scan outcome; ordering is canonical and reproducible."""

    records: list[GraphRecord]
    violations: list[ViolationRecord]
    internal_violation: bool
    aborted: bool
    wall_time_s: float

    @property
    def exit_code(self) -> int:
        if self.internal_violation:
            return EXIT_INTERNAL_VIOLATION
        if self.violations:
            return EXIT_CONJECTURE_VIOLATION
        return EXIT_OK

    def summary(self) -> dict:
        by_status: dict[str, int] = {}
        for rec in self.records:
            by_status[rec.status] = by_status.get(rec.status, 0) + 1
        return {
            "graphs": len(self.records),
            "by_status": by_status,
            "violations": len(self.violations),
            "internal_violation": self.internal_violation,
            "aborted": self.aborted,
        }


def _tally(record: GraphRecord, verdict: ClaimVerdict) -> None:
    claim_tally = record.tallies.setdefault(verdict.claim, {})
    claim_tally[verdict.status] = claim_tally.get(verdict.status, 0) + 1


class _ProvenClaimViolated(Exception):
    """A proven statement failed; the enclosing scan must stop."""


def _examine_graph(
    graph: Graph, config: ScanConfig, hook=None
) -> tuple[GraphRecord, list[ViolationRecord], bool]:
    """Full per-graph evaluation. Returns the record, any violations, and
    whether a proven claim was violated (an internal error)."""
    g6 = graph_key(graph)
    record = GraphRecord(graph6=g6, n=graph.n, m=graph.m, status="checked")
    violations: list[ViolationRecord] = []

    if not is_connected(graph):
        record.status = "disconnected"
        return record, violations, False

    lp = enumerate_longest_paths(graph, config.enumeration_cap)
    record.l = lp.length
    record.num_longest = len(lp.paths)
    record.truncated = lp.truncated
    if lp.truncated:
        record.status = "skipped_truncated"
        return record, violations, False

    gallai = gallai_vertex_set(graph, longest_paths=lp)
    record.gallai_size = len(gallai)
    record.triples_total = comb(len(lp.paths), 3)

    def run(verdict: ClaimVerdict) -> None:
        _tally(record, verdict)
        if verdict.status == VIOLATED:
            violations.append(ViolationRecord(g6, verdict.claim, verdict.witness or {}))
            if verdict.claim in PROVEN_CLAIMS:
                raise _ProvenClaimViolated

    try:
        if hook is not None:
            for verdict in hook(graph, lp):
                run(verdict)

        if len(lp.paths) < 3:
            record.status = "vacuous"
            # A lone longest-path pair still gets the pairwise check.
            if len(lp.paths) == 2 and "prop1" in config.checks:
                record.pairs_examined = 1
                run(check_prop1(graph, lp.paths[0], lp.paths[1], longest_paths=lp))
            return record, violations, False

        if config.triple_mode == "shortcut-first" and gallai:
            # Some vertex lies on every longest path, so every pair and
            # triple meets there: every intersection claim holds with
            # f = 0 throughout.
            record.status = "shortcut"
            record.max_f = 0
            return record, violations, False

        limit = (
            record.triples_total if config.triple_mode == "all" else config.triple_cap
        )
        seen_pairs: set[tuple] = set()
        for combo in combinations(lp.paths, 3):
            if record.triples_examined >= limit:
                break
            record.triples_examined += 1
            triple = PathTriple(combo)
            analysis = analyze_triple(graph, triple, strict_t=config.strict_t)
            record.max_f = (
                analysis.f if record.max_f is None else max(record.max_f, analysis.f)
            )
            low_t = min(analysis.t_counts)
            record.min_t = low_t if record.min_t is None else min(record.min_t, low_t)
            if "prop1" in config.checks:
                for a, b in combinations(triple.paths, 2):
                    key = (a.vertices, b.vertices)
                    if key in seen_pairs:
                        continue
                    seen_pairs.add(key)
                    record.pairs_examined += 1
                    run(check_prop1(graph, a, b, longest_paths=lp))
            for name in config.checks:
                checker = _TRIPLE_CHECKERS.get(name)
                if checker is not None:
                    run(checker(graph, triple, longest_paths=lp, analysis=analysis))
            for t in config.subdivision_t:
                run(verify_proposition(graph, triple, t, longest_paths=lp))
                run(check_size_bound(graph, triple, t))
        record.triples_skipped = record.triples_total - record.triples_examined
        return record, violations, False
    except _ProvenClaimViolated:
        if record.triples_total is not None:
            record.triples_skipped = record.triples_total - record.triples_examined
        return record, violations, True


def _resolve_source(config: ScanConfig) -> list[Graph]:
    if config.generate_n is not None:
        graphs = []
        for n in range(1, config.generate_n + 1):
            graphs.extend(generate_connected_graphs(n))
        return graphs
    if config.input_path == "-":
        text = sys.stdin.read()
    else:
        with open(config.input_path, "r", encoding="ascii") as fh:
            text = fh.read()
    if config.input_format == "graph6":
        return parse_graph6_lines(text.splitlines())
    return [parse_edge_list(text)]


def _scan_worker(item):
    graph, config = item
    return _examine_graph(graph, config)


def scan(config: ScanConfig, *, _test_hook=None) -> ScanReport:
    """Run the configured scan over its corpus.

    ``_test_hook`` lets tests inject synthetic verdicts per graph to
    exercise the violation plumbing; it forces serial execution.
    """
    start = time.monotonic()
    graphs = _resolve_source(config)
    results = []
    aborted = False
    if config.jobs == 1 or _test_hook is not None or len(graphs) < 2:
        for graph in graphs:
            outcome = _examine_graph(graph, config, hook=_test_hook)
            results.append(outcome)
            if outcome[2]:
                aborted = True
                break
    else:
        ctx = get_context("fork")
        chunk = max(1, len(graphs) // (config.jobs * 8))
        with ctx.Pool(processes=config.jobs) as pool:
            for outcome in pool.imap(
                _scan_worker, ((g, config) for g in graphs), chunksize=chunk
            ):
                results.append(outcome)
                if outcome[2]:
                    aborted = True
                    pool.terminate()
                    break

    order = sorted(range(len(results)), key=lambda i: (results[i][0].graph6, i))
    records = [results[i][0] for i in order]
    violations = [v for i in order for v in results[i][1]]
    internal = any(results[i][2] for i in order)
    return ScanReport(
        records=records,
        violations=violations,
        internal_violation=internal,
        aborted=aborted,
        wall_time_s=time.monotonic() - start,
    )


# ---------------------------------------------------------------------------
# report emission
# ---------------------------------------------------------------------------

_CSV_COLUMNS = (
    "graph6",
    "n",
    "m",
    "status",
    "l",
    "num_longest",
    "truncated",
    "gallai_size",
    "triples_total",
    "triples_examined",
    "triples_skipped",
    "pairs_examined",
    "max_f",
    "min_t",
    "violations",
)


def emit_report(report: ScanReport, fmt: str = "json") -> str:
    """Serialise a scan report. JSON and CSV are byte-deterministic for a
    given corpus and check set; the text form adds wall-clock timing."""
    if fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "summary": report.summary(),
            "graphs": [rec.to_json() for rec in report.records],
            "violations": [v.to_json() for v in report.violations],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        per_graph_violations: dict[str, int] = {}
        for v in report.violations:
            per_graph_violations[v.graph6] = per_graph_violations.get(v.graph6, 0) + 1
        for rec in report.records:
            row = rec.to_json()
            row["violations"] = per_graph_violations.get(rec.graph6, 0)
            writer.writerow(["" if row[c] is None else row[c] for c in _CSV_COLUMNS])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        s = report.summary()
        lines.append(f"graphs scanned: {s['graphs']}")
        for status in sorted(s["by_status"]):
            lines.append(f"  {status}: {s['by_status'][status]}")
        lines.append(f"violations: {s['violations']}")
        if report.internal_violation:
            lines.append("INTERNAL ERROR: a proven claim was violated (bug)")
        if report.aborted:
            lines.append("scan aborted early")
        for v in report.violations:
            lines.append(f"  {v.claim} violated on {v.graph6}: {v.witness}")
        lines.append(f"wall time: {report.wall_time_s:.2f}s")
        lines.append(f"exit code: {report.exit_code}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


# ---------------------------------------------------------------------------
# single-graph deep dive
# ---------------------------------------------------------------------------

def analyze_one(
    graph: Graph,
    *,
    checks: tuple[str, ...] = ALL_CHECKS,
    enumeration_cap: int = DEFAULT_PATH_CAP,
    triple_cap: int = 100_000,
    subdivision_t: tuple[int, ...] = (),
    strict_t: bool = False,
    hypotraceable: bool = False,
    hypotraceable_budget_s: float = 60.0,
) -> dict:
    """Exhaustive per-triple analysis of one graph, JSON-ready.

    Unlike a scan this never takes the common-vertex shortcut: every triple
    (up to ``triple_cap``) gets its full parameter record and verdicts.
    Disconnected input is reported, not raised.
    """
    out: dict = {"graph6": graph_key(graph), "n": graph.n, "m": graph.m}
    if not is_connected(graph):
        out["status"] = "disconnected"
        return out
    lp = enumerate_longest_paths(graph, enumeration_cap)
    out["l"] = lp.length
    out["num_longest"] = len(lp.paths)
    out["truncated"] = lp.truncated
    if lp.truncated:
        out["status"] = "skipped_truncated"
        return out
    gallai = gallai_vertex_set(graph, longest_paths=lp)
    out["gallai_vertices"] = sorted(gallai)
    out["gallai_size"] = len(gallai)
    if hypotraceable:
        try:
            out["hypotraceable"] = is_hypotraceable(graph, budget_s=hypotraceable_budget_s)
        except (ValueError, BudgetError) as exc:
            out["hypotraceable"] = None
            out["hypotraceable_error"] = str(exc)
    out["strict_crossings"] = strict_t
    triples_out = []
    total = comb(len(lp.paths), 3)
    out["triples_total"] = total
    if total == 0:
        out["status"] = "vacuous"
        out["triples"] = []
        return out
    examined = 0
    for combo in combinations(lp.paths, 3):
        if examined >= triple_cap:
            break
        examined += 1
        triple = PathTriple(combo)
        analysis = analyze_triple(graph, triple, strict_t=strict_t)
        entry = {
            "paths": [list(p.vertices) for p in triple.paths],
            "f": analysis.f,
            "witnesses": sorted(analysis.witnesses),
            "x_sizes": list(analysis.x_sizes),
            "t_counts": list(analysis.t_counts),
            "pairwise_sizes": [len(s) for s in analysis.pairwise],
            "verdicts": {},
        }
        for name in checks:
            checker = _TRIPLE_CHECKERS.get(name)
            if checker is not None:
                v = checker(graph, triple, longest_paths=lp, analysis=analysis)
                entry["verdicts"][v.claim] = v.status
        if "prop1" in checks:
            statuses = []
            for a, b in combinations(triple.paths, 2):
                statuses.append(check_prop1(graph, a, b, longest_paths=lp).status)
            entry["verdicts"]["prop1"] = statuses
        sub = {}
        for t in subdivision_t:
            prop = verify_proposition(graph, triple, t, longest_paths=lp)
            size = check_size_bound(graph, triple, t)
            sub[str(t)] = {"subdivision_prop": prop.status, "size_bound": size.status}
        if sub:
            entry["subdivision"] = sub
        triples_out.append(entry)
    out["triples_examined"] = examined
    out["triples"] = triples_out
    out["max_f"] = max(t["f"] for t in triples_out)
    out["min_t"] = min(min(t["t_counts"]) for t in triples_out)
    out["status"] = "checked"
    return out


# ---------------------------------------------------------------------------
# dedicated subdivision sweep (the exhaustive small-n verification)
# ---------------------------------------------------------------------------

def subdivision_sweep(
    max_n: int,
    t_values: tuple[int, ...],
    *,
    include_proposition: bool = True,
    include_size_bound: bool = True,
    max_vertices: int = 60,
    budget_s: float = 120.0,
    triple_cap: int | None = None,
) -> dict:
    """Verify the subdivision claims over the longest-path triples of every
    connected graph on 1..max_n vertices, for each multiplicity.

    With ``triple_cap`` set, only the first that many triples per graph (in
    canonical order) are verified and the rest are counted as skipped; the
    six-vertex level already contains a graph with 7.7 million triples, so
    exhaustive sweeps beyond n = 5 need the cap. Returns a JSON-ready
    summary with any violations plus per-instance timing extrema (timing is
    informational and not part of the deterministic report surface).
    """
    graphs = 0
    eligible = 0
    instances = 0
    skipped = 0
    triples_skipped = 0
    worst_s = 0.0
    violations: list[dict] = []
    for n in range(1, max_n + 1):
        for graph in generate_connected_graphs(n):
            graphs += 1
            lp = enumerate_longest_paths(graph)
            if len(lp.paths) < 3 or lp.truncated:
                continue
            eligible += 1
            total = comb(len(lp.paths), 3)
            limit = total if triple_cap is None else min(total, triple_cap)
            triples_skipped += total - limit
            examined = 0
            for combo in combinations(lp.paths, 3):
                if examined >= limit:
                    break
                examined += 1
                triple = PathTriple(combo)
                for t in t_values:
                    t0 = time.monotonic()
                    verdicts = []
                    if include_proposition:
                        verdicts.append(
                            verify_proposition(
                                graph,
                                triple,
                                t,
                                longest_paths=lp,
                                max_vertices=max_vertices,
                                budget_s=budget_s,
                            )
                        )
                    if include_size_bound:
                        verdicts.append(check_size_bound(graph, triple, t))
                    worst_s = max(worst_s, time.monotonic() - t0)
                    instances += 1
                    for v in verdicts:
                        if v.status == VIOLATED:
                            violations.append(
                                {"claim": v.claim, "graph6": graph_key(graph), "witness": v.witness}
                            )
                        elif v.status in ("skipped_budget", "skipped_truncated"):
                            skipped += 1
    return {
        "max_n": max_n,
        "t_values": list(t_values),
        "graphs": graphs,
        "graphs_with_triples": eligible,
        "instances": instances,
        "skipped": skipped,
        "triples_skipped": triples_skipped,
        "violations": violations,
        "worst_instance_s": worst_s,
    }
