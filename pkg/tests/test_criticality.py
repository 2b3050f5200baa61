from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from tdcrit.criticality import (
    PreconditionError,
    check_cross_edge_conditions,
    check_deletion_sets_avoid_neighborhood,
    check_frame_structure,
    cycle_criticality_profile,
    drop,
    exempt_vertices,
    is_k_gamma_t_critical,
    lift,
    structural_checks,
)
from tdcrit.domination import gamma_t, is_total_dominating
from tdcrit.families import build_cycle, build_g4m, build_g4m2
from tdcrit.graph import INF, delete_vertex, from_edges, is_connected, relabel

from conftest import graphs, random_graph


def star(leaves):
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def test_exempt_vertices():
    assert exempt_vertices(star(3)) == 0b1
    assert exempt_vertices(from_edges(2, [(0, 1)])) == 0b11
    for m in range(3, 7):
        assert exempt_vertices(build_g4m2(m).graph) == 0


@pytest.mark.parametrize("m", range(3, 9))
def test_families_are_3_critical(m):
    assert is_k_gamma_t_critical(build_g4m2(m).graph, 3).verdict
    assert is_k_gamma_t_critical(build_g4m(m).graph, 3).verdict


def test_cycles_small():
    assert is_k_gamma_t_critical(build_cycle(5), 3).verdict
    rep = is_k_gamma_t_critical(build_cycle(4), 2)
    assert not rep.verdict
    assert all(e.gamma_t == 2 for e in rep.entries)  # C_4 - v = P_3


def test_disconnected_rejected():
    with pytest.raises(PreconditionError):
        is_k_gamma_t_critical(from_edges(4, [(0, 1), (2, 3)]), 2)


def test_report_lines():
    rep = is_k_gamma_t_critical(build_cycle(5), 3)
    lines = rep.lines()
    assert lines[0] == "k=3 gamma_t=3 verdict=true"
    assert len(lines) == 6
    assert lines[1].startswith("v=0 exempt=false gtv=2 witness=0x")
    star_rep = is_k_gamma_t_critical(star(3), 2)
    assert "gtv=inf witness=-" in star_rep.lines()[1]
    assert "exempt=true" in star_rep.lines()[1]


def test_infinite_deletion_fails_only_when_not_exempt():
    # P_4: deleting an inner vertex isolates a leaf, but inner vertices are exempt
    p4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    rep = is_k_gamma_t_critical(p4, 2)
    assert rep.entries[1].gamma_t == INF and rep.entries[1].exempt
    # a triangle with a pendant path of length 2: deleting the middle vertex
    # of the path isolates the end, and that vertex is not exempt (its neighbour
    # in the path has degree 2)
    g = from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    rep = is_k_gamma_t_critical(g, int(gamma_t(g).value))
    assert not rep.verdict


@given(graphs(min_n=2, max_n=9))
@settings(max_examples=150)
def test_report_witnesses_dominate(g):
    if not is_connected(g):
        return
    rep = is_k_gamma_t_critical(g, 3)
    assert rep.verdict == (rep.gamma_t_value == 3 and all(
        e.exempt or e.gamma_t == 2 for e in rep.entries))
    for e in rep.entries:
        if e.gamma_t != INF:
            h = delete_vertex(g, e.vertex)
            assert is_total_dominating(h, drop(e.witness, e.vertex))


def test_lift_drop_inverse():
    for v in range(6):
        for s in range(1 << 5):
            assert drop(lift(s, v), v) == s


def test_verdict_invariant_under_relabeling():
    rng = random.Random(11)
    samples = [build_cycle(5), build_cycle(6), build_cycle(7), build_g4m(3).graph]
    while len(samples) < 40:
        g = random_graph(rng, rng.randint(4, 12), 0.45)
        if is_connected(g):
            samples.append(g)
    for g in samples:
        k = gamma_t(g).value
        if k == INF:
            continue
        v = is_k_gamma_t_critical(g, int(k)).verdict
        for _ in range(5):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert is_k_gamma_t_critical(relabel(g, perm), int(k)).verdict == v


def test_cycle_profile():
    prof = cycle_criticality_profile(20)
    assert prof[:3] == [(3, 2, False), (4, 2, False), (5, 3, True)]
    assert [n for n, _, crit in prof if crit] == [5, 6, 9, 10, 13, 14, 17, 18]


@pytest.mark.parametrize("build", [build_g4m2, build_g4m])
def test_deletion_sets_avoid_neighborhood(build):
    res = check_deletion_sets_avoid_neighborhood(build(3).graph)
    assert res.applicable and res.holds


def test_deletion_check_not_applicable_to_c4():
    res = check_deletion_sets_avoid_neighborhood(build_cycle(4))
    assert not res.applicable and not res


@pytest.mark.parametrize("build", [build_g4m2, build_g4m])
def test_frame_and_cross_edges_on_families(build):
    g = build(3).graph
    assert check_frame_structure(g, 0)
    cross = check_cross_edge_conditions(g, 0)
    assert cross and cross.detail == {"a": True, "b": True, "c": True}
    assert list(structural_checks(g)) == [0]


def test_frame_not_applicable_on_c6():
    c6 = build_cycle(6)
    for x in range(6):
        assert not check_frame_structure(c6, x).applicable
        assert not check_cross_edge_conditions(c6, x).applicable


def test_cross_edges_negative_case():
    # x = 0 sees 3..6; y = 1 takes {3, 4}, z = 2 takes {5, 6}; no y_i z_j edge
    edges = [(0, v) for v in range(3, 7)] + [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)]
    g = from_edges(7, edges)
    res = check_cross_edge_conditions(g, 0)
    assert res.applicable and not res.holds
    assert res.detail == {"a": False, "b": True, "c": True}
