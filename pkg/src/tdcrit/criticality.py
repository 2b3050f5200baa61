"""Total-domination vertex-criticality and structural checks on critical graphs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .domination import all_minimum_total_dominating_sets, gamma_t
from .families import build_cycle
from .graph import (
    INF,
    Graph,
    GraphError,
    VertexSet,
    bits,
    delete_vertex,
    is_connected,
    mask_of,
    max_degree,
)


class PreconditionError(GraphError):
    """Input violates a structural precondition (e.g. disconnected)."""


def lift(s: VertexSet, v: int) -> VertexSet:
    """Map a vertex set of ``G - v`` back to the labels of ``G``."""
    low = s & ((1 << v) - 1)
    return low | ((s >> v) << (v + 1))


def drop(s: VertexSet, v: int) -> VertexSet:
    """Map a vertex set of ``G`` avoiding ``v`` to the labels of ``G - v``."""
    assert not s >> v & 1
    low = s & ((1 << v) - 1)
    return low | ((s >> (v + 1)) << v)


@dataclass(frozen=True)
class VertexEntry:
    vertex: int
    exempt: bool
    gamma_t: float
    witness: VertexSet | None  # labels of G, not G - v

    def line(self) -> str:
        gtv = "inf" if self.gamma_t == INF else str(int(self.gamma_t))
        wit = "-" if self.witness is None else hex(self.witness)
        return f"v={self.vertex} exempt={_b(self.exempt)} gtv={gtv} witness={wit}"


@dataclass(frozen=True)
class CriticalityReport:
    k: int
    gamma_t_value: float
    entries: tuple[VertexEntry, ...]
    verdict: bool

    def lines(self) -> list[str]:
        gt = "inf" if self.gamma_t_value == INF else str(int(self.gamma_t_value))
        head = f"k={self.k} gamma_t={gt} verdict={_b(self.verdict)}"
        return [head] + [e.line() for e in self.entries]

    def human(self) -> str:
        gt = "inf" if self.gamma_t_value == INF else int(self.gamma_t_value)
        out = [f"gamma_t(G) = {gt}, claimed k = {self.k}: "
               f"{'CRITICAL' if self.verdict else 'not critical'}"]
        for e in self.entries:
            tag = " (exempt)" if e.exempt else ""
            g = "inf" if e.gamma_t == INF else int(e.gamma_t)
            out.append(f"  G - {e.vertex}{tag}: gamma_t = {g}, witness {list(bits(e.witness or 0))}")
        return "\n".join(out)


def _b(flag: bool) -> str:
    return "true" if flag else "false"


def exempt_vertices(g: Graph) -> VertexSet:
    """Vertices adjacent to at least one vertex of degree one."""
    leaves = mask_of(v for v, row in enumerate(g.adj) if row.bit_count() == 1)
    return mask_of(v for v, row in enumerate(g.adj) if row & leaves)


def is_k_gamma_t_critical(g: Graph, k: int) -> CriticalityReport:
    if g.n < 2 or k < 2:
        raise PreconditionError("criticality needs n >= 2 and k >= 2")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    value = gamma_t(g).value
    exempt = exempt_vertices(g)
    entries = []
    ok = value == k
    for v in range(g.n):
        res = gamma_t(delete_vertex(g, v))
        is_exempt = bool(exempt >> v & 1)
        witness = None if res.witness is None else lift(res.witness, v)
        entries.append(VertexEntry(v, is_exempt, res.value, witness))
        if not is_exempt and res.value != k - 1:
            ok = False
    return CriticalityReport(k, value, tuple(entries), ok)


def cycle_criticality_profile(n_max: int) -> list[tuple[int, int, bool]]:
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    rows = []
    for n in range(3, n_max + 1):
        c = build_cycle(n)
        k = int(gamma_t(c).value)
        rows.append((n, k, is_k_gamma_t_critical(c, k).verdict))
    return rows


# ---------------------------------------------------------------------------
# structure of 3-critical graphs of order max_degree + 3
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    applicable: bool
    holds: bool | None = None
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.applicable and self.holds)


NOT_APPLICABLE = CheckResult(False)


def max_degree_vertices(g: Graph) -> list[int]:
    d = max_degree(g)
    return [v for v, row in enumerate(g.adj) if row.bit_count() == d]


def frame_of(g: Graph, x: int) -> tuple[int, int] | None:
    """The two non-neighbours (y, z) of a maximum-degree x in a graph of
    order max_degree + 3, or None if ``x`` does not sit in such a frame."""
    if g.n == 0 or g.n != max_degree(g) + 3 or g.adj[x].bit_count() != g.n - 3:
        return None
    y, z = bits(g.full & ~g.adj[x] & ~(1 << x))
    return y, z


def is_three_critical_of_order_delta_plus_3(g: Graph) -> bool:
    if g.n < 4 or g.n != max_degree(g) + 3 or not is_connected(g):
        return False
    return is_k_gamma_t_critical(g, 3).verdict


def check_deletion_sets_avoid_neighborhood(g: Graph) -> CheckResult:
    """Every minimum total dominating set of ``G - v`` misses N(v), for all v.

    Applies only to 3-critical graphs of order max_degree + 3; the first
    offending (v, set) pair is reported in ``detail``.
    """
    if not is_three_critical_of_order_delta_plus_3(g):
        return NOT_APPLICABLE
    for v in range(g.n):
        h = delete_vertex(g, v)
        if not gamma_t(h).finite:
            continue
        for s in all_minimum_total_dominating_sets(h):
            lifted = lift(s, v)
            if lifted & g.adj[v]:
                return CheckResult(True, False, {"vertex": v, "set": lifted})
    return CheckResult(True, True)


def check_frame_structure(g: Graph, x: int) -> CheckResult:
    """y-z is an edge and each neighbour of x sees exactly one of y, z."""
    frame = frame_of(g, x)
    if frame is None:
        return NOT_APPLICABLE
    y, z = frame
    yz = g.has_edge(y, z)
    bad = [v for v in bits(g.adj[x]) if (g.adj[v] & ((1 << y) | (1 << z))).bit_count() != 1]
    return CheckResult(True, yz and not bad, {"y": y, "z": z, "yz_edge": yz, "violations": bad})


def check_cross_edge_conditions(g: Graph, x: int) -> CheckResult:
    """Three cross-edge conditions between Y = N(y)-z and Z = N(z)-y.

    ``detail`` holds booleans ``a`` (some Y-Z edge exists), ``b`` (every
    member of Y misses some member of Z) and ``c`` (every member of Z misses
    some member of Y); ``holds`` is their conjunction.
    """
    frame = frame_of(g, x)
    if frame is None:
        return NOT_APPLICABLE
    y, z = frame
    ys = g.adj[y] & ~(1 << z)
    zs = g.adj[z] & ~(1 << y)
    a = any(g.adj[u] & zs for u in bits(ys))
    b = all(zs & ~g.adj[u] for u in bits(ys))
    c = all(ys & ~g.adj[w] for w in bits(zs))
    return CheckResult(True, a and b and c, {"a": a, "b": b, "c": c})


def structural_checks(g: Graph) -> dict[int, dict[str, CheckResult]]:
    """Frame and cross-edge checks for every maximum-degree candidate x."""
    return {x: {"frame": check_frame_structure(g, x), "cross": check_cross_edge_conditions(g, x)}
            for x in max_degree_vertices(g)}
