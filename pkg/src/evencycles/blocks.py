"""Per-block work on G - z: the degree bound for A-vertices inside a block
and the block hitting set (or a packing when too many segments of the
block's A-cycle reach z)."""
from __future__ import annotations

import dataclasses
from typing import Dict, FrozenSet, List, Optional, Union

from .certificates import Packing
from .cycles import ThetaWitness, even_A_cycle_from_theta, theta_from_cycle_and_path
from .flow import vertex_disjoint_fan
from .graph import Cycle, Edge, LabeledGraph, bfs_path, norm_edge
from .pipeline import ConstructionError, PipelineState, SingleZViolation, steiner3, theta_cycle


@dataclasses.dataclass(frozen=True)
class Ok:
    pass


@dataclasses.dataclass(frozen=True)
class ViolationWitness:
    block: int
    vertex: int
    theta: ThetaWitness
    cycle: Cycle


def check_block_degree(G: LabeledGraph, A=None, z: Optional[int] = None, state=None):
    """Ok if every A-vertex has at most two neighbours inside each block of
    G - z; otherwise a theta graph centred at the offending vertex together
    with its even A-cycle (which avoids z)."""
    if state is None:
        G = G.with_labels(A=A) if A is not None else G
        state = PipelineState(G, G.z if z is None else z, 1)
    G, bt = state.G, state.bt
    for bi, B in enumerate(bt.blocks):
        for a in sorted(B & state.A):
            nbrs = [w for w in G.adj[a] if w in B]
            if len(nbrs) < 3:
                continue
            allowed = set(B) - {a}
            m, legs = steiner3(G.adj, allowed, nbrs[:3])
            theta = ThetaWitness.build([[a] + leg[::-1] for leg in legs], state.A)
            return ViolationWitness(bi, a, theta, even_A_cycle_from_theta(theta, state.A))
    return Ok()


def _block_nbrs(G, B, v):
    return [w for w in G.adj[v] if w in B]


@dataclasses.dataclass
class BlockDecomposition:
    """The cycle through A in a block and its segments."""
    cycle: List[int]                 # starts at a_0
    a: List[int]                     # a_0 .. a_{l-1} in cycle order
    segments: List[List[int]]        # P_i as vertex lists a_i .. a_{i+1}
    extra: List[List[int]]           # bridge vertices assigned to each S_i


def decompose_block(state: PipelineState, bi: int) -> BlockDecomposition:
    G, A = state.G, state.A
    B = state.bt.blocks[bi]
    AB = sorted(B & A)
    a0 = AB[0]
    nb = _block_nbrs(G, B, a0)
    if len(nb) != 2:
        raise SingleZViolation(f"A-vertex {a0} has {len(nb)} neighbours in its block")
    path = bfs_path(G.adj, nb[0], {nb[1]}, allowed=set(B) - {a0})
    if path is None:
        raise ConstructionError("block is not 2-connected")
    cyc = [a0] + path
    pos = {v: i for i, v in enumerate(cyc)}
    C = Cycle.canonical(cyc)
    for a in AB:
        if a in pos:
            continue
        fan = vertex_disjoint_fan(G.adj, a, set(cyc), allowed=B, limit=2)
        if len(fan) < 2:
            raise ConstructionError("block is not 2-connected")
        P = fan[0][::-1] + fan[1][1:]
        theta = theta_from_cycle_and_path(C, P, A)
        raise SingleZViolation("A-vertex off the block's A-cycle",
                               even_A_cycle_from_theta(theta, A))
    avs = [v for v in cyc if v in A]
    l = len(avs)
    apos = [pos[a] for a in avs]
    segs = []
    for i in range(l):
        s, t = apos[i], apos[(i + 1) % l]
        if t <= s:
            t += len(cyc)
        segs.append([cyc[j % len(cyc)] for j in range(s, t + 1)])
    seg_of: Dict[int, set] = {}
    for i, P in enumerate(segs):
        for v in P[1:-1]:
            seg_of[v] = {i}
    for i, a in enumerate(avs):
        seg_of[a] = {(i - 1) % l, i}
    extra: List[List[int]] = [[] for _ in range(l)]
    Cedges = set(C.edges)
    # chords
    for u, v in sorted(state.bt.block_edges[bi]):
        if u in pos and v in pos and norm_edge(u, v) not in Cedges:
            _assign(state, C, segs, seg_of, [u, v], [], A)
    # bridges: components of B - V(C)
    rest = sorted(set(B) - set(cyc))
    seen = set()
    for s in rest:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in _block_nbrs(G, B, x):
                if y not in pos and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        att = sorted({y for x in comp for y in _block_nbrs(G, B, x) if y in pos})
        i = _assign(state, C, segs, seg_of, att, comp, A)
        extra[i].extend(sorted(comp))
    return BlockDecomposition(cyc, avs, segs, extra)


def _assign(state, C, segs, seg_of, att, comp, A) -> int:
    common = set.intersection(*(seg_of[v] for v in att))
    if common:
        return min(common)
    # a C-path joining two different segments: theta with two A-arcs
    x = att[0]
    y = next(v for v in att if not seg_of[v] & seg_of[x])
    if comp:
        inner = bfs_path(state.G.adj, x, {y}, allowed=set(comp) | {y})
        P = inner
    else:
        P = [x, y]
    theta = theta_from_cycle_and_path(C, P, A)
    raise SingleZViolation("C-path between different segments of a block",
                           even_A_cycle_from_theta(theta, A))


def block_hitting_set(state: PipelineState, bi: int) -> Union[FrozenSet[Edge], Packing]:
    """Edges of block ``bi`` meeting every even cycle that uses an
    A-incident edge of the block, or a packing of k even A-cycles."""
    G, A, k = state.G, state.A, state.k
    B = state.bt.blocks[bi]
    BE = state.bt.block_edges[bi]
    if len(B & A) <= 2:
        return frozenset(e for e in BE if e[0] in A or e[1] in A)
    dec = decompose_block(state, bi)
    l = len(dec.a)
    cuts = state.bt.cutvertices
    hot = []
    for i in range(l):
        S = set(dec.segments[i][:-1]) | set(dec.extra[i])
        if S & cuts or S & state.znbrs:
            hot.append(i)
    ends = {dec.a[i] for j in hot for i in (j, (j + 1) % l)}
    F = frozenset(e for e in BE if ends & set(e))
    if len(hot) < 3 * k:
        return F
    return _segment_packing(state, bi, dec, hot[:3 * k], F)


def _segment_packing(state, bi, dec, idx, F) -> Packing:
    G, A, k, z = state.G, state.A, state.k, state.z
    B = state.bt.blocks[bi]
    outside = set(range(G.n)) - set(B)
    Q, q = [], []
    for i in idx:
        P = dec.segments[i]
        S = (set(P) | set(dec.extra[i])) - {P[-1]}
        path = bfs_path(G.adj, z, set(P[:-1]), allowed=outside | S)
        if path is None:
            raise ConstructionError(f"no z-path into segment {i}", F)
        Q.append(path)
        q.append(path[-1])
    cyc = dec.cycle
    n = len(cyc)
    pos = {v: j for j, v in enumerate(cyc)}

    def forward(u, v):
        s, t = pos[u], pos[v]
        if t < s:
            t += n
        return [cyc[j % n] for j in range(s, t + 1)]

    cycles = []
    for t in range(k):
        q0, q1, q2 = q[3 * t: 3 * t + 3]
        Q0, Q1, Q2 = Q[3 * t: 3 * t + 3]
        p1 = Q0 + forward(q0, q1)[1:]
        p2 = Q1
        p3 = Q2 + forward(q1, q2)[::-1][1:]
        try:
            cycles.append(theta_cycle([p1, p2, p3], A))
        except Exception as exc:  # pragma: no cover - guarded by validation
            raise ConstructionError(f"segment theta {t}: {exc}", F)
    return Packing(k, tuple(cycles), "block-segments")
