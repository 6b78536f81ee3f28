"""Shared graph builders and independent test oracles.

The oracles here deliberately reimplement functionality from first
principles (plain adjacency sets, no bitmasks, no pruning) so the package
is checked against code that shares none of its machinery.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import pytest

from gallai.generate import generate_connected_graphs
from gallai.graphs import Graph, from_edge_list


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider_graph(arms: int, arm_length: int) -> Graph:
    """Centre 0 with ``arms`` legs of ``arm_length`` edges each."""
    edges = []
    nxt = 1
    for _ in range(arms):
        prev = 0
        for _ in range(arm_length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def theta_graph() -> Graph:
    """Two hubs joined by three internally disjoint two-edge routes."""
    return from_edge_list(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


@lru_cache(maxsize=None)
def corpus(n: int) -> tuple[Graph, ...]:
    return tuple(generate_connected_graphs(n))


def corpus_up_to(n: int) -> list[Graph]:
    out: list[Graph] = []
    for k in range(1, n + 1):
        out.extend(corpus(k))
    return out


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def oracle_distances(graph: Graph, a: int) -> dict[int, int]:
    """Plain queue BFS over adjacency lists, no bitmasks."""
    adj = {v: graph.neighbors(v) for v in range(graph.n)}
    dist = {a: 0}
    queue = [a]
    while queue:
        nxt = []
        for u in queue:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        queue = nxt
    return dist


def oracle_pair_distance(graph: Graph, a: int, b: int) -> int | None:
    return oracle_distances(graph, a).get(b)


def oracle_f_value(graph: Graph, paths) -> tuple[int, set[int]]:
    """Double loop over vertices and paths, taking the minimum single-pair
    distance to each path's vertices."""
    best = None
    argmin: set[int] = set()
    for v in range(graph.n):
        dist = oracle_distances(graph, v)
        total = 0
        for p in paths:
            total += min(dist[u] for u in p.vertices)
        if best is None or total < best:
            best = total
            argmin = {v}
        elif total == best:
            argmin.add(v)
    return best, argmin


def oracle_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism by trying every vertex bijection."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(
        h.degree(v) for v in range(h.n)
    ):
        return False
    g_edges = set(g.edges())
    h_edges = set(h.edges())
    for perm in permutations(range(g.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in g_edges}
        if mapped == h_edges:
            return True
    return False


@pytest.fixture
def k13() -> Graph:
    return star_graph(3)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)
