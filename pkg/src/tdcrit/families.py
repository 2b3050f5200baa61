"""Explicit 3-total-domination-critical families and cycles.

Vertex layout of the labeled families is fixed: 0 = x, 1 = y, 2 = z, then
y_1..y_p at 3..2+p, then z_1..z_q.  Index formulas below are written with the
same 1-based subscripts as the defining edge sets and translated to vertex
indices only through :meth:`LabeledGraph.index`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, GraphError, VertexSet, from_edges


class ParameterError(GraphError):
    pass


class Family(enum.Enum):
    G4M2 = "g4m2"
    G4M = "g4m"
    CYCLE = "cycle"


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    size: int  # m for G4M2/G4M, cycle length for CYCLE

    def __post_init__(self) -> None:
        if self.family is Family.CYCLE:
            if self.size < 3:
                raise ParameterError(f"cycle length must be >= 3, got {self.size}")
        elif self.size < 3:
            raise ParameterError(f"{self.family.value} needs m >= 3, got {self.size}")

    def build(self) -> Graph:
        if self.family is Family.G4M2:
            return build_g4m2(self.size).graph
        if self.family is Family.G4M:
            return build_g4m(self.size).graph
        return build_cycle(self.size)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    p: int  # number of y_i
    q: int  # number of z_j

    X, Y, Z = 0, 1, 2

    def y(self, i: int) -> int:
        if not 1 <= i <= self.p:
            raise IndexError(f"y_{i} out of range 1..{self.p}")
        return 2 + i

    def z(self, j: int) -> int:
        if not 1 <= j <= self.q:
            raise IndexError(f"z_{j} out of range 1..{self.q}")
        return 2 + self.p + j

    def index(self, label: str) -> int:
        if label in ("x", "y", "z"):
            return "xyz".index(label)
        kind, sub = label[0], int(label[1:])
        return self.y(sub) if kind == "y" else self.z(sub)

    @property
    def labels(self) -> list[str]:
        return (["x", "y", "z"] + [f"y{i}" for i in range(1, self.p + 1)]
                + [f"z{j}" for j in range(1, self.q + 1)])


WitnessTable = dict[int, VertexSet]


def _check_m(m: int) -> None:
    if m < 3:
        raise ParameterError(f"family parameter m must be >= 3, got {m}")


def _frame_edges(p: int, q: int) -> set[tuple[str, str]]:
    """x-y_i, y-y_i, x-z_j, z-z_j, and y-z."""
    e = {("x", f"y{i}") for i in range(1, p + 1)}
    e |= {(f"y{i}", "y") for i in range(1, p + 1)}
    e |= {("x", f"z{j}") for j in range(1, q + 1)}
    e |= {(f"z{j}", "z") for j in range(1, q + 1)}
    # yz is forced (z belongs to N(y)), though the edge sets never list it
    e.add(("y", "z"))
    return e


def _realize(p: int, q: int, labeled_edges: set[tuple[str, str]]) -> LabeledGraph:
    shell = LabeledGraph(Graph(0, ()), p, q)
    edges = {tuple(sorted((shell.index(a), shell.index(b)))) for a, b in labeled_edges}
    return LabeledGraph(from_edges(3 + p + q, edges), p, q)


def build_g4m2(m: int) -> LabeledGraph:
    """Order 4m+2, maximum degree 4m-1 (x)."""
    _check_m(m)
    p, q = 2 * m - 1, 2 * m
    e = _frame_edges(p, q)
    e |= {(f"y{i}", f"y{1 + (i + m - 2) % (2 * m - 1)}") for i in range(1, p + 1)}
    e |= {(f"z{i}", f"z{j}") for i in range(1, q + 1) for j in range(i + 1, q + 1) if j != i + m}
    e |= {(f"y{i}", f"z{j}") for i in range(1, p + 1) for j in range(1, q + 1)
          if j != i and j != i + 1}
    return _realize(p, q, e)


def build_g4m(m: int) -> LabeledGraph:
    """Order 4m, maximum degree 4m-3 (x)."""
    _check_m(m)
    p, q = 2 * m - 2, 2 * m - 1
    e = _frame_edges(p, q)
    e |= {(f"y{i}", f"y{j}") for i in range(1, p + 1) for j in range(i + 1, p + 1)
          if j != i + m - 1}
    e |= {(f"z{i}", f"z{1 + (i + m - 2) % (2 * m - 1)}") for i in range(1, q + 1)}
    e |= {(f"y{i}", f"z{j}") for i in range(1, p + 1) for j in range(1, q + 1)
          if j != i and j != i + 1}
    e.add(("y1", "z2"))
    return _realize(p, q, e)


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle length must be >= 3, got {n}")
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def _pair(lg: LabeledGraph, a: str, b: str) -> VertexSet:
    return (1 << lg.index(a)) | (1 << lg.index(b))


def witness_g4m2(m: int) -> WitnessTable:
    """Size-2 total dominating set of ``G - v`` for every vertex v of G_{4m+2}.

    The z_i rows with i > m come from the index-reversing automorphism
    y_i -> y_{2m-i}, z_j -> z_{2m+1-j} applied to the rows with i <= m.
    """
    lg = build_g4m2(m)
    t: WitnessTable = {
        lg.X: _pair(lg, "y", "z"),
        lg.Y: _pair(lg, "x", "z1"),
        lg.Z: _pair(lg, "x", "y1"),
    }
    for i in range(1, 2 * m):
        if i <= m:
            t[lg.y(i)] = _pair(lg, f"y{i + m - 2}", f"z{i}")
        else:
            t[lg.y(i)] = _pair(lg, f"y{i - m + 2}", f"z{i + 1}")
    for i in range(1, 2 * m + 1):
        if i <= m:
            t[lg.z(i)] = _pair(lg, f"y{i}", f"z{i + m}")
        else:
            t[lg.z(i)] = _pair(lg, f"y{i - 1}", f"z{i - m}")
    return t


def witness_g4m(m: int) -> WitnessTable:
    lg = build_g4m(m)
    t: WitnessTable = {
        lg.X: _pair(lg, "y", "z"),
        lg.Y: _pair(lg, "x", "z1"),
        lg.Z: _pair(lg, "x", "y1"),
    }
    for i in range(1, 2 * m - 1):
        if i <= m - 1:
            t[lg.y(i)] = _pair(lg, f"y{i + m - 1}", f"z{i}")
        else:
            t[lg.y(i)] = _pair(lg, f"y{i - m + 1}", f"z{i + 1}")
    for i in range(1, 2 * m):
        if i <= m:
            t[lg.z(i)] = _pair(lg, f"y{i}", f"z{1 + (i + m) % (2 * m - 1)}")
        else:
            t[lg.z(i)] = _pair(lg, f"y{i - 1}", f"z{1 + (i + m - 3) % (2 * m - 1)}")
    return t
