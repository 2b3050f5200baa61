"""Canonical labeling by lexicographically least graph6 string."""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, GraphError, decode_graph6, encode_graph6, relabel

MAX_CANON_ORDER = 11


def canonical_order(g: Graph) -> tuple[int, ...]:
    """Vertex sequence whose relabeling yields the least graph6 string.

    graph6 lists the upper triangle column by column, so vertex number j
    contributes its adjacency to positions 0..j-1 as the j-th column.  Fixed
    length columns compared in order make the global minimum greedy: keep
    every partial sequence whose columns so far are minimal, extend all of
    them, repeat.

    Twins (equal neighbourhoods apart from each other) are interchangeable
    while both are unplaced, so only the lowest unplaced twin is extended.
    """
    n = g.n
    adj = g.adj
    twin_of = [min(u for u in range(n) if adj[u] & ~(1 << v) == adj[v] & ~(1 << u))
               for v in range(n)]
    twins = [[u for u in range(n) if twin_of[u] == twin_of[v]] for v in range(n)]

    def candidates(used: int) -> list[int]:
        out = []
        for v in range(n):
            if used >> v & 1:
                continue
            if any(u < v and not used >> u & 1 for u in twins[v]):
                continue
            out.append(v)
        return out

    states: list[tuple[int, ...]] = [(v,) for v in candidates(0)]
    for j in range(1, n):
        best = None
        nxt: list[tuple[int, ...]] = []
        for seq in states:
            used = 0
            for u in seq:
                used |= 1 << u
            for v in candidates(used):
                row = adj[v]
                col = 0
                for u in seq:
                    col = (col << 1) | (row >> u & 1)
                if best is None or col < best:
                    best = col
                    nxt = [seq + (v,)]
                elif col == best:
                    nxt.append(seq + (v,))
        states = nxt
    return states[0] if states else ()


def canonical_graph6(g: Graph) -> str:
    if g.n > MAX_CANON_ORDER:
        raise GraphError(f"canonical form limited to order {MAX_CANON_ORDER}")
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return encode_graph6(relabel(g, perm))


def dedup_isomorphic(graphs: Iterable[Graph]) -> list[Graph]:
    """One representative per isomorphism class, each in canonical labeling,
    sorted by canonical graph6.  Repeated labeled inputs are canonicalized once."""
    seen: dict[str, str] = {}
    for g in graphs:
        if g.n > MAX_CANON_ORDER:
            raise GraphError(f"dedup limited to order {MAX_CANON_ORDER}")
        key = encode_graph6(g)
        if key not in seen:
            seen[key] = canonical_graph6(g)
    return [decode_graph6(c) for c in sorted(set(seen.values()))]
