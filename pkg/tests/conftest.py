from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from tdcrit.graph import Graph, from_edges

_ACCEPTANCE: list[str] = []


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, on in zip(pairs, mask) if on])


@st.composite
def graphs_with_perm(draw, min_n: int = 1, max_n: int = 10) -> tuple[Graph, list[int]]:
    g = draw(graphs(min_n, max_n))
    return g, draw(st.permutations(list(range(g.n))))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.fixture
def acceptance_log():
    def record(criterion: str, ok: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" -- {detail}" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
