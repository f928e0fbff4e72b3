import json

import pytest

from conftest import GOLDEN
from evencycles.cycles import CyclePredicate, PreconditionError, enumerate_cycles
from evencycles.gadgets import (GadgetSpec, bipartite_part_cycles, elementary_wall, long_gadget,
                                mod_gadget, verify_gadget)
from evencycles.graph import GraphError, LabeledGraph, norm_edge, serialize_graph


def is_bipartite(G, colour):
    return all(colour[u] != colour[v] for u, v in G.edges)


@pytest.mark.parametrize("rows, cols", [(2, 2), (3, 4), (4, 4), (6, 6), (5, 2)])
def test_wall_structure(rows, cols):
    W, ws = elementary_wall(rows, cols)
    assert W.n == len(ws.coords)
    colour = {i: (x + y) % 2 for i, (x, y) in enumerate(ws.coords)}
    assert is_bipartite(W, colour)
    assert {W.degree(v) for v in range(W.n)} <= {2, 3}
    assert len(W.components()) == 1
    assert ws.U | ws.V == set(range(W.n)) and not ws.U & ws.V
    # the degree-2 vertices lie on the outer boundary rows or columns
    xs = [x for x, _ in ws.coords]
    for v in range(W.n):
        x, y = ws.coords[v]
        if W.degree(v) == 3:
            assert 0 < y < rows or x not in (min(xs), max(xs))


def test_wall_rejects_small_sizes():
    with pytest.raises(PreconditionError):
        elementary_wall(1, 3)
    with pytest.raises(PreconditionError):
        elementary_wall(3, 1)


def test_wall_counts():
    assert (elementary_wall(2, 2)[0].n, elementary_wall(2, 2)[0].m) == (16, 19)
    W, _ = elementary_wall(6, 6)
    assert (W.n, W.m) == (96, 131)


def test_wall_golden_file():
    W, ws = elementary_wall(6, 6)
    assert serialize_graph(W) == (GOLDEN / "wall_6x6.graph").read_text()
    coords = json.loads((GOLDEN / "wall_6x6.json").read_text())["coords"]
    assert [tuple(c) for c in coords] == list(ws.coords)


def test_long_gadget_golden_file():
    G, info = long_gadget(GadgetSpec(wall_size=4))
    assert serialize_graph(G) == (GOLDEN / "long_gadget_4x4.graph").read_text()
    assert json.loads((GOLDEN / "long_gadget_4x4.json").read_text()) == \
        json.loads(json.dumps(info.to_json()))


@pytest.mark.parametrize("size, counts", [(4, (50, 71)), (6, (98, 143))])
def test_long_gadget_shape(size, counts):
    G, info = long_gadget(GadgetSpec(wall_size=size))
    assert (G.n, G.m) == counts
    assert len(info.A) == size and G.A == set(info.A)
    wall = info.wall
    # u sees left-most vertices of every second row, all in one colour class
    un = [x for x in G.adj[info.u] if x in wall]
    vn = [x for x in G.adj[info.v] if x in wall]
    assert len(un) == len(vn) == size // 2
    assert {wall[x][0] for x in un} == {0} and {sum(wall[x]) % 2 for x in un} == {1}
    assert {sum(wall[x]) % 2 for x in vn} == {0}
    for a in info.A:
        assert set(G.adj[a]) == {info.u, info.v}
    # after suppression only one colour class is left on the top row
    top = [x for x, (_, y) in wall.items() if y == size]
    inner = [x for x in top if G.degree(x) == 3]
    assert len({sum(wall[x]) % 2 for x in inner}) == 1


def test_gadget_spec_validation():
    with pytest.raises(PreconditionError):
        GadgetSpec(ell=4)
    with pytest.raises(PreconditionError):
        GadgetSpec(m=2)
    with pytest.raises(PreconditionError):
        GadgetSpec(h=0)
    with pytest.raises(PreconditionError):
        long_gadget(GadgetSpec(wall_size=3))
    with pytest.raises(PreconditionError):
        mod_gadget(GadgetSpec(wall_size=2))
    assert GadgetSpec(h=2).size == 20
    assert GadgetSpec(m=3).predicate() == CyclePredicate(meets_A=True, modulus=(3, 0))


def test_small_long_gadget_verifies():
    G, info = long_gadget(GadgetSpec(wall_size=2))
    rep = verify_gadget(G, info)
    assert rep.passed, rep.checks
    assert G.n == 18


def test_deleting_a_top_edge_keeps_parity():
    G, info = long_gadget(GadgetSpec(wall_size=2))
    e = info.top_edges[0]
    H = G.remove_edges([e])
    rep = verify_gadget(H, info)
    assert rep.get("parity")
    assert len(enumerate_cycles(H, info.spec.predicate())) == 6


def test_injected_A_edges_break_wall_property():
    # a0-a1 and a2-a3 give the 6-cycle u a0 a1 v a2 a3 that never enters the wall
    G, info = long_gadget(GadgetSpec(wall_size=4))
    a = info.A
    H = LabeledGraph(G.n, G.edges | {norm_edge(a[0], a[1]), norm_edge(a[2], a[3])}, G.A)
    part, old = H.induced([info.u, info.v, *a])
    off_wall = [{old[x] for x in c.vertices} for c in enumerate_cycles(part, info.spec.predicate())]
    assert {info.u, info.v, *a} in off_wall
    # without the injected edges the part has only 4-cycles
    part, _ = G.induced([info.u, info.v, *a])
    assert not enumerate_cycles(part, info.spec.predicate())


def test_u_v_edge_fault_in_mod_gadget():
    G, info = mod_gadget(GadgetSpec(wall_size=2, m=3))
    H = LabeledGraph(G.n, G.edges | {norm_edge(info.u, info.v)}, G.A)
    rep = verify_gadget(H, info)
    assert not rep.get("targets meet wall")
    assert not rep.passed


def test_missing_id_maps():
    G, _ = long_gadget(GadgetSpec(wall_size=2))
    with pytest.raises(GraphError):
        verify_gadget(G, None)


def test_mod_gadget_lengths_and_bipartite_part():
    G, info = mod_gadget(GadgetSpec(wall_size=2, m=3))
    assert (G.n, G.m) == (52, 57)
    cycles = bipartite_part_cycles(G, info)
    assert cycles and all(len(c) == 2 * 3 - 2 for c in cycles)
    assert all(len(c) % 3 for c in cycles)
    u, v = info.u, info.v
    for e, p in info.paths.items():
        if u in e and set(e) & set(info.A):
            assert len(p) - 1 == 1
        elif v in e and set(e) & set(info.A):
            assert len(p) - 1 == 1


@pytest.mark.parametrize("m", [3, 4, 5])
def test_mod_gadget_bipartite_cycles_have_length_2m_minus_2(m):
    G, info = mod_gadget(GadgetSpec(wall_size=2, m=m))
    cycles = bipartite_part_cycles(G, info)
    assert {len(c) for c in cycles} == {2 * m - 2}
    assert all(len(c) % m for c in cycles)


def test_mod_gadget_verifies_at_small_scale():
    G, info = mod_gadget(GadgetSpec(wall_size=2, m=3))
    rep = verify_gadget(G, info)
    assert rep.passed, rep.checks
    assert rep.get("lengths") and rep.get("targets use top row")


def test_gadget_json_sidecar():
    G, info = mod_gadget(GadgetSpec(wall_size=2, m=3))
    d = info.to_json()
    assert d["spec"]["m"] == 3 and len(d["paths"]) == len(info.paths)
    json.dumps(d)
