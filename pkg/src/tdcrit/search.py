"""Exhaustive search for k-total-domination-critical graphs of order delta + k.

Two enumeration spaces share one vectorized filter:

* ``pruned`` (k = 3 only): the forced frame around a maximum-degree vertex x,
  its non-neighbours y, z (adjacent), and N(x) split into A = N(y) - z and
  B = N(z) - y.  Only the C(delta, 2) edges inside N(x) vary.
* ``full``: every labeled graph on ``order`` vertices.

Candidates are held as numpy arrays of adjacency rows, one row of uint16
bitmasks per graph.  Survivors are rebuilt as :class:`Graph`, re-verified by
the scalar criticality check, and deduplicated up to isomorphism.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .canon import canonical_graph6, dedup_isomorphic
from .criticality import is_k_gamma_t_critical
from .graph import Graph, GraphError, decode_graph6, diameter, is_connected, max_degree

log = logging.getLogger(__name__)

PRUNED_MAX_DELTA = 8
FULL_MAX_ORDER = 8
LOW_BITS = 16


class SearchParameterError(GraphError):
    pass


@dataclass(frozen=True)
class SearchFrame:
    delta: int
    a: int  # |N(y) - z|

    def __post_init__(self) -> None:
        if not frame_is_feasible(self.delta, self.a):
            raise SearchParameterError(f"frame a={self.a} infeasible for delta={self.delta}")

    @property
    def order(self) -> int:
        return self.delta + 3

    @property
    def side_a(self) -> range:
        return range(3, 3 + self.a)

    @property
    def side_b(self) -> range:
        return range(3 + self.a, 3 + self.delta)

    def skeleton(self) -> tuple[int, ...]:
        """Adjacency rows of the fixed part: 0 = x, 1 = y, 2 = z, then A, then B."""
        x, y, z = 0, 1, 2
        edges = [(y, z)]
        edges += [(x, v) for v in range(3, 3 + self.delta)]
        edges += [(y, v) for v in self.side_a]
        edges += [(z, v) for v in self.side_b]
        rows = [0] * self.order
        for u, v in edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def free_pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(3, 3 + self.delta), 2))

    def skeleton_degrees(self) -> tuple[int, int]:
        """Degrees of y and z fixed by the frame."""
        return self.a + 1, self.delta - self.a + 1


@dataclass(frozen=True)
class ExemptFrame:
    """Frame for a maximum-degree x that is adjacent to a leaf.

    Layout: 0 = x, 1 = the leaf, 2..delta = the other neighbours of x, then
    the two non-neighbours of x.  Every pair outside {x, leaf} is free.  The
    split frames above cannot hold such graphs, because there G - x has no
    criticality requirement.
    """

    delta: int

    @property
    def order(self) -> int:
        return self.delta + 3

    def skeleton(self) -> tuple[int, ...]:
        rows = [0] * self.order
        for v in range(1, self.delta + 1):
            rows[0] |= 1 << v
            rows[v] |= 1
        return tuple(rows)

    def free_pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(2, self.order), 2))


EXEMPT_MAX_DELTA = 7


def frame_is_feasible(delta: int, a: int) -> bool:
    """y has degree a + 1 and z has degree delta - a + 1; both must stay <= delta."""
    return 1 <= a <= delta - 1


def enumerate_frames(delta: int) -> list[SearchFrame]:
    if delta < 2:
        raise SearchParameterError(f"delta must be >= 2, got {delta}")
    # swapping the names y and z maps a to delta - a
    return [SearchFrame(delta, a) for a in range(1, delta // 2 + 1)]


@dataclass
class SearchOutcome:
    mode: str
    delta: int
    k: int
    frames_enumerated: int = 0
    graphs_tested: int = 0
    certificates: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def footer(self) -> str:
        return (f"delta={self.delta} k={self.k} mode={self.mode} frames={self.frames_enumerated} "
                f"tested={self.graphs_tested} found={len(self.certificates)} "
                f"seconds={self.elapsed:.3f}")

    def key(self) -> tuple:
        """Everything except wall time."""
        return (self.mode, self.delta, self.k, self.frames_enumerated, self.graphs_tested,
                tuple(self.certificates))


# ---------------------------------------------------------------------------
# vectorized filter
# ---------------------------------------------------------------------------

def _unions(rows: np.ndarray, subsets: list[tuple[int, ...]]) -> np.ndarray:
    out = np.empty((rows.shape[0], len(subsets)), dtype=rows.dtype)
    for c, sub in enumerate(subsets):
        acc = rows[:, sub[0]].copy()
        for v in sub[1:]:
            acc |= rows[:, v]
        out[:, c] = acc
    return out


def _any_cover(unions: np.ndarray, target: int) -> np.ndarray:
    if unions.shape[1] == 0:
        return np.zeros(unions.shape[0], dtype=bool)
    return (unions == target).any(axis=1)


def _diameter_at_most_two(rows: np.ndarray, n: int) -> np.ndarray:
    full = (1 << n) - 1
    ok = np.ones(rows.shape[0], dtype=bool)
    for v in range(n):
        reach = rows[:, v] | np.uint16(1 << v)
        for u in range(n):
            has = (rows[:, v] >> u) & 1
            reach |= rows[:, u] * has.astype(rows.dtype)
        ok &= reach == full
    return ok


def critical_survivors(rows: np.ndarray, n: int, k: int, delta: int | None = None,
                       prune_diameter: bool = False) -> np.ndarray:
    """Indices of the graphs in ``rows`` that pass, in this order: maximum
    degree == delta (when given), optional diameter <= 2 prune, no total
    dominating (k-1)-set, some total dominating k-set, and for every vertex v
    not adjacent to a leaf a total dominating (k-1)-set of G - v but no
    (k-2)-set.

    Checking a single size suffices because supersets of total dominating
    sets are total dominating.  Connectivity is not checked here.
    """
    idx = np.arange(rows.shape[0])
    full = (1 << n) - 1

    def keep(mask: np.ndarray) -> None:
        nonlocal rows, idx
        rows, idx = rows[mask], idx[mask]

    if delta is not None:
        keep(np.bitwise_count(rows).max(axis=1) == delta)
    if prune_diameter and len(idx):
        keep(_diameter_at_most_two(rows, n))

    smaller = list(combinations(range(n), k - 1))
    u_small = _unions(rows, smaller)
    m = ~_any_cover(u_small, full)
    keep(m)
    u_small = u_small[m]
    if len(idx):
        m = _any_cover(_unions(rows, list(combinations(range(n), k))), full)
        keep(m)
        u_small = u_small[m]
    if not len(idx):
        return idx

    degs = np.bitwise_count(rows)
    leaves = np.zeros(rows.shape[0], dtype=rows.dtype)
    for v in range(n):
        leaves |= (degs[:, v] == 1).astype(rows.dtype) << np.uint16(v)
    tiny = list(combinations(range(n), k - 2)) if k >= 3 else []
    u_tiny = _unions(rows, tiny) if tiny else None

    ok = np.ones(rows.shape[0], dtype=bool)
    for v in range(n):
        bit = 1 << v
        target = full & ~bit
        cols = [c for c, sub in enumerate(smaller) if v not in sub]
        drops = _any_cover(u_small[:, cols] & target, target)
        if u_tiny is not None:
            tcols = [c for c, sub in enumerate(tiny) if v not in sub]
            drops &= ~_any_cover(u_tiny[:, tcols] & target, target)
        exempt = (rows[:, v] & leaves) != 0
        ok &= exempt | drops
    return idx[ok]


def _pair_table(n: int, pairs: list[tuple[int, int]]) -> np.ndarray:
    """Row contributions of every assignment of the given pairs, indexed by code."""
    codes = np.arange(1 << len(pairs), dtype=np.uint32)
    table = np.zeros((codes.size, n), dtype=np.uint16)
    for b, (u, v) in enumerate(pairs):
        on = ((codes >> b) & 1).astype(np.uint16)
        table[:, u] |= on << np.uint16(v)
        table[:, v] |= on << np.uint16(u)
    return table


@dataclass(frozen=True)
class _Shard:
    n: int
    base: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    hi_start: int
    hi_stop: int
    k: int
    delta: int
    prune_diameter: bool


def _scan(shard: _Shard) -> tuple[int, list[tuple[int, ...]]]:
    """Scan codes [hi_start << L, hi_stop << L) of one enumeration space."""
    low_n = min(LOW_BITS, len(shard.pairs))
    low_pairs, high_pairs = list(shard.pairs[:low_n]), list(shard.pairs[low_n:])
    table = _pair_table(shard.n, low_pairs) | np.array(shard.base, dtype=np.uint16)
    found: list[tuple[int, ...]] = []
    tested = 0
    for hi in range(shard.hi_start, shard.hi_stop):
        extra = [0] * shard.n
        for b, (u, v) in enumerate(high_pairs):
            if hi >> b & 1:
                extra[u] |= 1 << v
                extra[v] |= 1 << u
        rows = table | np.array(extra, dtype=np.uint16)
        tested += rows.shape[0]
        for i in critical_survivors(rows, shard.n, shard.k, shard.delta, shard.prune_diameter):
            found.append(tuple(int(r) for r in rows[i]))
    return tested, found


def _shards(n: int, base: tuple[int, ...], pairs: list[tuple[int, int]], k: int, delta: int,
            prune_diameter: bool, pieces: int) -> list[_Shard]:
    hi_total = 1 << max(0, len(pairs) - LOW_BITS)
    pieces = max(1, min(pieces, hi_total))
    cuts = [hi_total * i // pieces for i in range(pieces + 1)]
    return [_Shard(n, base, tuple(pairs), lo, hi, k, delta, prune_diameter)
            for lo, hi in zip(cuts, cuts[1:]) if hi > lo]


def _run(shards: list[_Shard], workers: int) -> tuple[int, list[tuple[int, ...]]]:
    if workers <= 1:
        results = map(_scan, shards)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan, shards))
    tested = 0
    found: list[tuple[int, ...]] = []
    for t, f in results:
        tested += t
        found.extend(f)
    return tested, found


def _certify(found: list[tuple[int, ...]], n: int, k: int, delta: int) -> list[str]:
    graphs = [g for g in (Graph(n, rows) for rows in found) if is_connected(g)]
    reps = dedup_isomorphic(graphs)
    certs = []
    for g in reps:
        g6 = canonical_graph6(g)
        if not verify_certificate(g6, k) or max_degree(g) != delta:
            raise RuntimeError(f"filter accepted a graph the scalar check rejects: {g6}")
        if diameter(g) != 2:
            log.warning("certificate %s has diameter %s", g6, diameter(g))
        certs.append(g6)
    return sorted(certs)


def default_workers() -> int:
    return int(os.environ.get("TDC_WORKERS", "1"))


def search_critical_pruned(delta: int, workers: int = 1, prune_diameter: bool = False,
                           include_exempt: bool = False) -> SearchOutcome:
    """Search 3-critical graphs of order delta + 3 inside the forced frames.

    The split frames assume the maximum-degree vertex x is not adjacent to a
    leaf.  ``include_exempt`` adds the :class:`ExemptFrame` so the search also
    covers graphs where it is.
    """
    if not 2 <= delta <= PRUNED_MAX_DELTA:
        raise SearchParameterError(
            f"pruned search supports 2 <= delta <= {PRUNED_MAX_DELTA}; got {delta} "
            f"(2^C(delta,2) assignments per frame)")
    if include_exempt and delta > EXEMPT_MAX_DELTA:
        raise SearchParameterError(
            f"exempt frame supports delta <= {EXEMPT_MAX_DELTA} (2^C(delta+1,2) assignments)")
    t0 = time.perf_counter()
    out = SearchOutcome("pruned", delta, 3)
    frames: list[SearchFrame | ExemptFrame] = list(enumerate_frames(delta))
    if include_exempt:
        frames.append(ExemptFrame(delta))
    shards = []
    for fr in frames:
        shards += _shards(fr.order, fr.skeleton(), fr.free_pairs(), 3, delta, prune_diameter,
                          pieces=4 * workers if workers > 1 else 1)
    tested, found = _run(shards, workers)
    out.frames_enumerated = len(frames)
    out.graphs_tested = tested
    out.certificates = _certify(found, delta + 3, 3, delta)
    out.elapsed = time.perf_counter() - t0
    log.info(out.footer())
    return out


def search_critical_full(order: int, delta: int, k: int, workers: int = 1,
                         prune_diameter: bool = False) -> SearchOutcome:
    """Search every labeled graph on ``order`` vertices; no structural pruning."""
    if order > FULL_MAX_ORDER:
        raise SearchParameterError(f"full search supports order <= {FULL_MAX_ORDER}, got {order}")
    if k < 2 or delta < 1 or order != delta + k:
        raise SearchParameterError(f"need k >= 2 and order == delta + k (got {order}, {delta}, {k})")
    t0 = time.perf_counter()
    out = SearchOutcome("full", delta, k)
    pairs = list(combinations(range(order), 2))
    shards = _shards(order, (0,) * order, pairs, k, delta, prune_diameter,
                     pieces=4 * workers if workers > 1 else 1)
    tested, found = _run(shards, workers)
    out.frames_enumerated = 1
    out.graphs_tested = tested
    out.certificates = _certify(found, order, k, delta)
    out.elapsed = time.perf_counter() - t0
    log.info(out.footer())
    return out


def certificate_graphs(outcome: SearchOutcome) -> list[Graph]:
    return [decode_graph6(c) for c in outcome.certificates]


def verify_certificate(g6: str, k: int) -> bool:
    g = decode_graph6(g6)
    return (g.n == max_degree(g) + k and is_connected(g)
            and is_k_gamma_t_critical(g, k).verdict)

