"""Exact domination and total domination numbers over adjacency bitmasks.

Both numbers are minimum set covers: every vertex must lie in the union of the
chosen rows (closed rows for domination, open rows for total domination).
The reported witness is always the numerically least minimum set, i.e. the
first hit of a scan over k-subsets in ascending bitmask order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .graph import INF, Graph, GraphError, VertexSet, bits, closed_neighborhood, open_neighborhood


class UndefinedTotalDomination(GraphError):
    """Raised where a finite total domination number is required."""


@dataclass(frozen=True)
class DominationResult:
    value: float  # int, or INF
    witness: VertexSet | None

    @property
    def finite(self) -> bool:
        return self.value != INF


def is_dominating(g: Graph, s: VertexSet) -> bool:
    return closed_neighborhood(g, s) == g.full


def is_total_dominating(g: Graph, s: VertexSet) -> bool:
    return open_neighborhood(g, s) == g.full


def k_subsets(n: int, k: int) -> Iterator[VertexSet]:
    """All k-subsets of ``range(n)`` as bitmasks, in ascending numeric order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    s = (1 << k) - 1
    limit = 1 << n
    while s < limit:
        yield s
        low = s & -s
        ripple = s + low
        s = ripple | (((s ^ ripple) >> 2) // low)


def has_isolated_vertex(g: Graph) -> bool:
    return any(row == 0 for row in g.adj)


def min_cover(rows: Sequence[int], need: VertexSet, allowed: VertexSet,
              limit: float = INF) -> float:
    """Fewest vertices from ``allowed`` whose rows jointly cover ``need``.

    Branch and bound: the lowest uncovered vertex must be covered by one of
    its candidate rows, and branch ``i`` excludes the candidates tried before
    it so no subset is visited twice.  Returns ``INF`` when no cover of size
    below ``limit`` exists.
    """
    best = limit

    def rec(need: int, allowed: int, used: int) -> None:
        nonlocal best
        if not need:
            best = min(best, used)
            return
        if used + 1 >= best:
            return
        reach = 0
        widest = 0
        for w in bits(allowed):
            cov = rows[w] & need
            reach |= cov
            widest = max(widest, cov.bit_count())
        if reach != need:
            return
        if used + -(-need.bit_count() // widest) >= best:
            return
        u = need & -need
        for w in bits(allowed):
            if rows[w] & u:
                rec(need & ~rows[w], allowed & ~(1 << w), used + 1)
                allowed &= ~(1 << w)

    rec(need, allowed, 0)
    return best


def least_cover(rows: Sequence[int], n: int, k: int) -> VertexSet | None:
    """Numerically least k-subset of ``range(n)`` whose rows cover everything.

    Vertices are decided from the highest index down, excluding whenever the
    remaining candidates can still finish a cover within the budget.
    """
    full = (1 << n) - 1
    chosen = 0
    for v in range(n - 1, -1, -1):
        below = (1 << v) - 1
        slots = k - chosen.bit_count()
        if slots == 0:
            break
        need = full & ~_union(rows, chosen)
        if below.bit_count() >= slots and min_cover(rows, need, below, slots + 1) <= slots:
            continue
        chosen |= 1 << v
    if chosen.bit_count() != k or _union(rows, chosen) != full:
        return None
    return chosen


def _union(rows: Sequence[int], s: VertexSet) -> VertexSet:
    out = 0
    for v in bits(s):
        out |= rows[v]
    return out


def gamma(g: Graph) -> DominationResult:
    if g.n == 0:
        raise GraphError("domination number needs n >= 1")
    rows = [row | (1 << v) for v, row in enumerate(g.adj)]
    k = int(min_cover(rows, g.full, g.full))
    return DominationResult(k, least_cover(rows, g.n, k))


def gamma_t(g: Graph) -> DominationResult:
    """Total domination number; ``INF`` with no witness iff a vertex is isolated."""
    if g.n == 0:
        raise GraphError("total domination number needs n >= 1")
    if has_isolated_vertex(g):
        return DominationResult(INF, None)
    k = int(min_cover(g.adj, g.full, g.full))
    return DominationResult(k, least_cover(g.adj, g.n, k))


def total_dominating_sets_of_size(g: Graph, k: int) -> Iterator[VertexSet]:
    """Every k-subset that totally dominates ``g``, ascending."""
    full = g.full
    for s in k_subsets(g.n, k):
        if open_neighborhood(g, s) == full:
            yield s


def all_minimum_total_dominating_sets(g: Graph) -> list[VertexSet]:
    res = gamma_t(g)
    if not res.finite:
        raise UndefinedTotalDomination("graph has an isolated vertex")
    return list(total_dominating_sets_of_size(g, int(res.value)))


# ---------------------------------------------------------------------------
# naive reference route: python sets and itertools, no bit tricks
# ---------------------------------------------------------------------------

def _neighbor_sets(g: Graph) -> list[set[int]]:
    return [{u for u in range(g.n) if g.has_edge(v, u)} for v in range(g.n)]


def naive_gamma_t(g: Graph) -> float:
    nbrs = _neighbor_sets(g)
    everything = set(range(g.n))
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if set().union(*(nbrs[v] for v in combo)) == everything:
                return k
    return INF


def naive_gamma(g: Graph) -> int:
    nbrs = _neighbor_sets(g)
    everything = set(range(g.n))
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if set(combo).union(*(nbrs[v] for v in combo)) == everything:
                return k
    raise AssertionError("unreachable for n >= 1")


def witness_vertices(s: VertexSet | None) -> list[int]:
    return [] if s is None else list(bits(s))
