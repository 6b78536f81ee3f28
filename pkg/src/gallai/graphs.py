"""Immutable bitset-backed graphs: construction, BFS distances, and
graph6 / edge-list interchange.

Vertices are dense integers ``0..n-1`` with no labels. Adjacency is one
Python int per vertex used as a bitset, which keeps neighbourhood
intersection and BFS frontier expansion at a handful of word operations;
path search treats these masks as its hot-loop data structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

GRAPH6_MAX_N = 62


class Graph6Error(ValueError):
    """Raised for malformed graph6 records."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Instances are immutable after construction and hashable, so they are
    safe to share across workers and to use as cache keys. Prefer the
    ``from_edge_list`` / ``parse_graph6`` factories, which validate input;
    the constructor trusts its adjacency masks.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        self.n = n
        self._adj = adj

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    def neighbors_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(a.bit_count() for a in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u in range(self.n):
            above = self._adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(above):
                out.append((u, v))
        return out

    def delete_vertex(self, v: int) -> "Graph":
        """The graph with vertex ``v`` removed and higher ids shifted down."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        if self.n == 1:
            raise ValueError("cannot delete the last vertex")
        low = (1 << v) - 1
        adj = []
        for u in range(self.n):
            if u == v:
                continue
            mask = self._adj[u]
            adj.append((mask & low) | (mask >> (v + 1)) << v)
        return Graph(self.n - 1, tuple(adj))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __reduce__(self):
        return (Graph, (self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Raises ``ValueError`` on out-of-range endpoints or self-loops.
    """
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# graph6 interchange (single-byte headers only, n <= 62)
# ---------------------------------------------------------------------------

def parse_graph6(record: str | bytes) -> Graph:
    """Decode one graph6 record.

    The optional ``>>graph6<<`` prefix and surrounding whitespace are
    tolerated; everything else is strict: header byte ``63 + n`` with
    ``1 <= n <= 62``, followed by exactly ``ceil(n(n-1)/2 / 6)`` data bytes
    in ``63..126`` packing the upper adjacency triangle column by column,
    most significant bit first.
    """
    if isinstance(record, bytes):
        try:
            text = record.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("graph6 record is not ASCII") from exc
    else:
        text = record
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):].strip()
    if not text:
        raise Graph6Error("empty graph6 record")
    header = ord(text[0])
    if header == 126:
        raise Graph6Error("extended size headers (n > 62) are not supported")
    if not 63 <= header <= 63 + GRAPH6_MAX_N:
        raise Graph6Error(f"bad graph6 header byte {header}")
    n = header - 63
    if n == 0:
        raise Graph6Error("graph6 record encodes zero vertices")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    data = text[1:]
    if len(data) != need:
        raise Graph6Error(
            f"graph6 record for n={n} needs {need} data bytes, got {len(data)}"
        )
    vals = []
    for ch in data:
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6Error(f"graph6 data byte {b} out of range 63..126")
        vals.append(b - 63)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if vals[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_graph6(graph: Graph) -> str:
    """Encode a graph as its canonical bare graph6 record (n <= 62)."""
    n = graph.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoding supports at most {GRAPH6_MAX_N} vertices")
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    adj = graph.adjacency
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph_key(graph: Graph) -> str:
    """A deterministic string id: graph6 when possible, edge list otherwise."""
    if graph.n <= GRAPH6_MAX_N:
        return to_graph6(graph)
    pairs = ";".join(f"{u},{v}" for u, v in graph.edges())
    return f"~n{graph.n}:{pairs}"


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("edge-list input needs an 'n m' header line")
    try:
        numbers = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError("edge-list input contains a non-integer token") from exc
    n, m = numbers[0], numbers[1]
    if len(numbers) != 2 + 2 * m:
        raise ValueError(
            f"edge-list input declares {m} edges but carries "
            f"{(len(numbers) - 2) // 2} endpoint pairs"
        )
    edges = [(numbers[2 + 2 * k], numbers[3 + 2 * k]) for k in range(m)]
    return from_edge_list(n, edges)


def format_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """Decode one graph per non-empty line."""
    out = []
    for line in lines:
        line = line.strip()
        if line:
            out.append(parse_graph6(line))
    return out


# ---------------------------------------------------------------------------
# connectivity and distances
# ---------------------------------------------------------------------------

def reachable_mask(adj: tuple[int, ...], start_mask: int, blocked: int = 0) -> int:
    """Bitmask of vertices reachable from ``start_mask`` avoiding ``blocked``."""
    seen = start_mask & ~blocked
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~blocked & ~seen
        seen |= frontier
    return seen


def is_connected(graph: Graph) -> bool:
    full = (1 << graph.n) - 1
    return reachable_mask(graph.adjacency, 1) == full


def _distance_list(adj: tuple[int, ...], n: int, src_mask: int) -> list[int | None]:
    """BFS layers from a source set; unreachable vertices stay ``None``."""
    dist: list[int | None] = [None] * n
    layer = src_mask
    seen = src_mask
    d = 0
    while layer:
        m = layer
        nxt = 0
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            dist[low.bit_length() - 1] = d
            m ^= low
        layer = nxt & ~seen
        seen |= layer
        d += 1
    return dist


@dataclass(frozen=True)
class DistanceVector:
    """Per-vertex BFS distance to the nearest source vertex.

    Unreachable vertices carry the explicit sentinel ``None``, never a
    large stand-in value.
    """

    dist: tuple[int | None, ...]
    sources: frozenset[int]

    def __getitem__(self, v: int) -> int | None:
        return self.dist[v]


def distances_from_set(graph: Graph, sources: Iterable[int]) -> DistanceVector:
    """Multi-source BFS distances ``min over s in sources of d(v, s)``."""
    src = frozenset(sources)
    if not src:
        raise ValueError("source set must be nonempty")
    mask = 0
    for s in src:
        if not 0 <= s < graph.n:
            raise ValueError(f"source vertex {s} out of range")
        mask |= 1 << s
    dist = _distance_list(graph.adjacency, graph.n, mask)
    return DistanceVector(tuple(dist), src)
