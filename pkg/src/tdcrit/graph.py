"""Simple undirected graphs stored as per-vertex adjacency bitmasks.

A vertex set is a plain ``int`` whose bit ``v`` marks vertex ``v``. Graphs are
immutable; every mutating operation returns a new :class:`Graph`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 62
INF = float("inf")

VertexSet = int


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class SizeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class VertexIndexError(GraphError, IndexError):
    pass


class EmptyGraphError(GraphError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 or edge-list text."""


def bits(s: VertexSet) -> Iterator[int]:
    """Yield the vertex indices in ``s`` in ascending order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise SizeError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def validate(self) -> None:
        """Raise :class:`GraphError` unless the rows form a simple graph."""
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise GraphError(f"row {v} has bits at or above n={self.n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}->{u}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def new_graph(n: int) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise SizeError(f"order {n} outside 0..{MAX_ORDER}")
    return Graph(n, (0,) * n)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise VertexIndexError(f"vertex {v} not in 0..{g.n - 1}")


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise SelfLoopError(f"self-loop at {u}")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge iterable; duplicate edges are merged."""
    if not 0 <= n <= MAX_ORDER:
        raise SizeError(f"order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexIndexError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Return ``g - v`` with vertices above ``v`` shifted down by one."""
    _check_vertex(g, v)
    low = (1 << v) - 1
    rows = []
    for u, row in enumerate(g.adj):
        if u == v:
            continue
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, tuple(rows))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Return the graph where old vertex ``u`` becomes ``perm[u]``."""
    adj = [0] * g.n
    for u, row in enumerate(g.adj):
        adj[perm[u]] = mask_of(perm[w] for w in bits(row))
    return Graph(g.n, tuple(adj))


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v].bit_count()


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraphError("max degree of the empty graph is undefined")
    return max(row.bit_count() for row in g.adj)


def open_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    return open_neighborhood(g, s) | s


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u]):
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g: Graph) -> float:
    """Largest shortest-path distance; ``INF`` when disconnected."""
    if g.n == 0:
        raise EmptyGraphError("diameter of the empty graph is undefined")
    return max(max(bfs_distances(g, v)) for v in range(g.n))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise EmptyGraphError("connectivity of the empty graph is undefined")
    seen = frontier = 1
    while frontier:
        frontier = open_neighborhood(g, frontier) & ~seen
        seen |= frontier
    return seen == g.full


def is_complete(g: Graph) -> bool:
    return all(row == g.full & ~(1 << v) for v, row in enumerate(g.adj))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no ``>>graph6<<`` header)."""
    n = g.n
    if n > MAX_ORDER:
        raise SizeError(f"graph6 single-byte order limited to {MAX_ORDER}")
    out = [chr(63 + n)]
    acc = nacc = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(63 + acc))
                acc = nacc = 0
    if nacc:
        out.append(chr(63 + (acc << (6 - nacc))))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"byte outside graph6 range in {text!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error("orders above 62 are not supported")
    nbits = n * (n - 1) // 2
    nchunks = (nbits + 5) // 6
    if len(codes) != 1 + nchunks:
        raise Graph6Error(f"expected {1 + nchunks} bytes for n={n}, got {len(codes)}")
    pad = nchunks * 6 - nbits
    if pad and codes[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if codes[1 + k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# edge list text: "n m" then m lines "u v"
# ---------------------------------------------------------------------------

def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise Graph6Error("edge list must start with a line 'n m'")
    try:
        n, m = map(int, lines[0])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise Graph6Error(f"bad edge list: {exc}") from exc
    if len(edges) != m:
        raise Graph6Error(f"header announces {m} edges, found {len(edges)}")
    return from_edges(n, edges)
