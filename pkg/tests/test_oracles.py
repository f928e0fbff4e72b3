import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cycle_graph, graphs, k4, two_c4
from evencycles.budget import BudgetError, OracleBudget
from evencycles.certificates import HittingSet, Packing, hitting_set
from evencycles.cycles import EVEN_A, enumerate_cycles
from evencycles.graph import Cycle, LabeledGraph
from evencycles.oracles import (_min_hitting, max_edge_disjoint_packing, min_edge_hitting_set,
                                min_vertex_hitting_set, packing_of_cycles, verify_certificate)


def disjoint_c4s():
    return LabeledGraph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
                                   A=[0, 4])


def test_packing_examples():
    assert max_edge_disjoint_packing(k4())[0] == 1
    cnt, cyc = max_edge_disjoint_packing(disjoint_c4s())
    assert cnt == 2 and not cyc[0].edges & cyc[1].edges
    assert max_edge_disjoint_packing(cycle_graph(3, A=[0]))[0] == 0
    assert max_edge_disjoint_packing(two_c4(), k_target=1)[0] == 1


def test_edge_hitting_examples():
    assert len(min_edge_hitting_set(k4())) == 2
    assert min_edge_hitting_set(cycle_graph(5, A=[0])) == []
    assert min_edge_hitting_set(cycle_graph(4, A=[2])) == [(0, 1)]


def test_vertex_hitting_examples():
    assert len(min_vertex_hitting_set(cycle_graph(4, A=[1]))) == 1
    assert min_vertex_hitting_set(two_c4()) == [0]
    bridge = LabeledGraph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4),
                                         (4, 5), (5, 6), (6, 7), (7, 4)], A=[1, 6])
    assert len(min_vertex_hitting_set(bridge)) == 2
    assert min_vertex_hitting_set(cycle_graph(3, A=[0])) == []


def test_min_hitting_is_lexicographic_minimum():
    # element 1 meets all three; {0, 2} beats {1, 3} for two disjoint pairs
    masks = [0b0110, 0b1010, 0b0010 | 0b10000]
    assert _min_hitting(masks, 5, OracleBudget().clock()) == [1]
    masks = [0b0011, 0b1100]
    assert _min_hitting(masks, 4, OracleBudget().clock()) == [0, 2]


def brute_packing(G, cycles):
    for r in range(len(cycles), 0, -1):
        for comb in itertools.combinations(cycles, r):
            es = [e for c in comb for e in c.edges]
            if len(es) == len(set(es)):
                return r
    return 0


def brute_hitting(G, cycles):
    edges = G.sorted_edges
    for r in range(len(edges) + 1):
        for comb in itertools.combinations(edges, r):
            if all(c.edges & set(comb) for c in cycles):
                return list(comb)


@given(graphs(max_n=7))
def test_oracles_match_brute_force(G):
    cycles = enumerate_cycles(G, EVEN_A)
    if len(cycles) > 14:
        return
    p, wit = max_edge_disjoint_packing(G)
    assert p == brute_packing(G, cycles)
    assert all(c in cycles for c in wit)
    h = min_edge_hitting_set(G)
    assert h == brute_hitting(G, cycles)
    assert p <= len(h)


@given(graphs(max_n=8))
def test_packing_cap(G):
    p, _ = max_edge_disjoint_packing(G)
    for t in range(p + 2):
        cnt, cyc = max_edge_disjoint_packing(G, k_target=t)
        assert cnt == min(t, p) == len(cyc)


@given(graphs(max_n=8), st.data())
def test_monotone_under_edge_addition(G, data):
    missing = [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if (u, v) not in G.edges]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    H = LabeledGraph.from_edges(G.n, G.edges | {e}, G.A)
    assert max_edge_disjoint_packing(H)[0] >= max_edge_disjoint_packing(G)[0]
    assert len(min_edge_hitting_set(H)) >= len(min_edge_hitting_set(G))


@given(graphs(max_n=8))
def test_oracles_deterministic(G):
    assert max_edge_disjoint_packing(G) == max_edge_disjoint_packing(G)
    assert min_edge_hitting_set(G) == min_edge_hitting_set(G)
    assert min_vertex_hitting_set(G) == min_vertex_hitting_set(G)


def test_packing_of_cycles_accepts_any_family():
    G = k4(A=())
    tri = [c for c in enumerate_cycles(G) if len(c) == 3]
    # the four triangles of K4 pairwise share an edge
    assert packing_of_cycles(G, tri)[0] == 1
    assert packing_of_cycles(G, [])[0] == 0


def test_budget_errors():
    big = LabeledGraph.from_edges(70, [(i, i + 1) for i in range(69)], A=[0])
    with pytest.raises(BudgetError):
        max_edge_disjoint_packing(big)
    K = LabeledGraph.from_edges(8, [(u, v) for u in range(8) for v in range(u + 1, 8)], A=[0])
    with pytest.raises(BudgetError):
        min_edge_hitting_set(K, budget=OracleBudget(max_cycles=100))
    with pytest.raises(BudgetError):
        max_edge_disjoint_packing(K, budget=OracleBudget(max_nodes_expanded=5))
    with pytest.raises(ValueError):
        OracleBudget(time_cap=0)


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("EVENCYC_BUDGET", '{"max_vertices": 10}')
    assert OracleBudget.from_env().max_vertices == 10
    monkeypatch.delenv("EVENCYC_BUDGET")
    assert OracleBudget.from_env() == OracleBudget()


# ------------------------------------------------------------- verification

def test_verify_valid_packing():
    G = disjoint_c4s()
    _, cyc = max_edge_disjoint_packing(G)
    rep = verify_certificate(G, 2, Packing(2, tuple(cyc)))
    assert rep.passed and rep.to_json()["status"] == "pass"


def test_verify_hitting_set_missing_a_cycle():
    G = disjoint_c4s()
    rep = verify_certificate(G, 3, hitting_set(3, {(0, 1): "oracle"}))
    assert rep.status == "fail"
    assert rep.counterexample is not None and rep.counterexample.meets(G.A)
    assert not rep.counterexample.edges & {(0, 1)}
    assert verify_certificate(G, 3, hitting_set(3, {(0, 1): "x", (4, 5): "x"})).passed


def test_verify_rejects_tampering():
    G = disjoint_c4s()
    bad = Packing(1, (Cycle((0, 1, 0, 3)),))
    rep = verify_certificate(G, 1, bad)
    assert rep.status == "fail"
    assert any("repeated vertex" in d for _, ok, d in rep.checks if not ok)
    odd = LabeledGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], A=[0])
    rep = verify_certificate(odd, 1, Packing(1, (Cycle.canonical(range(5)),)))
    assert rep.status == "fail"
    shared = Packing(2, (Cycle.canonical([0, 1, 2, 3]), Cycle.canonical([0, 1, 2, 3])))
    assert not verify_certificate(G, 2, shared).passed
    assert not verify_certificate(G, 3, Packing(3, ())).passed
    foreign = HittingSet(1, ((0, 2),), ("oracle",))
    assert not verify_certificate(G, 1, foreign).passed


def test_verify_ignores_provenance_but_checks_claimed_bound():
    G = cycle_graph(4, A=[0])
    ok = hitting_set(2, {(0, 1): "block:F_B"}, bound=1)
    assert verify_certificate(G, 2, ok).passed
    over = hitting_set(2, {(0, 1): "oracle", (1, 2): "oracle"}, bound=1)
    assert not verify_certificate(G, 2, over).passed


def test_verify_inconclusive_on_budget():
    K = LabeledGraph.from_edges(8, [(u, v) for u in range(8) for v in range(u + 1, 8)], A=[0])
    rep = verify_certificate(K, 1, hitting_set(1, {}), budget=OracleBudget(max_nodes_expanded=3))
    assert rep.status == "inconclusive"
