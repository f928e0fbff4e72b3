"""Hitting set for a string: per-block sets when few blocks meet A, a small
edge cut when one exists, and otherwise a packing assembled from many
edge-disjoint cycles running along the string."""
from __future__ import annotations

import dataclasses
from typing import FrozenSet, List, Optional, Union

from .blocks import block_hitting_set
from .certificates import Packing
from .cycles import ABCPath, abc_path
from .flow import edge_disjoint_paths, min_edge_cut, vertex_disjoint_fan
from .graph import Cycle, Edge, LabeledGraph, path_edges
from .pipeline import ConstructionError, PipelineState, StringPath, theta_from_two_cycles


@dataclasses.dataclass
class _StringCycle:
    segs: List[List[int]]   # one b_{i-1} -> b_i path per block of the string
    back: List[int]         # b_l -> b_0 outside the string

    def vertices(self) -> List[int]:
        out = list(self.segs[0])
        for s in self.segs[1:]:
            out += s[1:]
        return out + self.back[1:-1]

    def cycle(self) -> Cycle:
        return Cycle.canonical(self.vertices())


def string_cuts(state: PipelineState, S: StringPath):
    """The three cut problems, as (name, edges, source, sink)."""
    G = state.G
    SV = state.string_vertices(S)
    b0, bl = S.cutvertices[0], S.cutvertices[-1]
    out = []
    for name, b in (("z-b0", b0), ("z-bl", bl)):
        gone = SV - {b}
        out.append((name, [e for e in G.edges if not (set(e) & gone)], state.z, b))
    out.append(("b0-bl", sorted(state.string_edges(S)), b0, bl))
    return out


def string_hitting_set(state: PipelineState, S: StringPath) -> Union[FrozenSet[Edge], Packing]:
    k, A = state.k, state.A
    ablocks = [b for b in S.blocks if state.bt.blocks[b] & A]
    if len(ablocks) < 2 * k:
        return _union_of_blocks(state, ablocks)
    for name, edges, s, t in string_cuts(state, S):
        value, cut = min_edge_cut(edges, s, t, limit=10 * k + 1)
        if cut is not None and value <= 10 * k:
            return frozenset(cut)
    try:
        return _string_packing(state, S, ablocks)
    except ConstructionError as exc:
        # the per-block sets still meet every S-heavy cycle, only the size bound is lost
        F = _union_of_blocks(state, ablocks)
        if isinstance(F, Packing):
            return F
        raise ConstructionError(str(exc), F)


def _union_of_blocks(state, ablocks):
    F = set()
    for b in ablocks:
        r = block_hitting_set(state, b)
        if isinstance(r, Packing):
            return r
        F |= r
    return frozenset(F)


def _string_packing(state: PipelineState, S: StringPath, ablocks) -> Packing:
    G, A, k = state.G, state.A, state.k
    bt = state.bt
    b = list(S.cutvertices)
    SV = state.string_vertices(S)
    SE = state.string_edges(S)
    need = 10 * k
    Y = edge_disjoint_paths(SE, b[0], b[-1], limit=need)
    H = [e for e in G.edges if e not in SE and not (set(e) & (SV - {b[0], b[-1]}))]
    W = edge_disjoint_paths(H, b[-1], b[0], limit=need)
    if len(Y) < need or len(W) < need:
        raise ConstructionError("fewer edge-disjoint paths than the cut bound promises")
    cycles: List[_StringCycle] = []
    for y, w in zip(Y, W):
        cut_at = [y.index(c) for c in b]
        segs = [y[cut_at[i]: cut_at[i + 1] + 1] for i in range(len(b) - 1)]
        cycles.append(_StringCycle(segs, w))

    # one A-vertex per chosen block, preferring vertices that are not cutvertices
    chosen = []
    for bi in ablocks[:2 * k]:
        cand = sorted(bt.blocks[bi] & A, key=lambda v: (v in bt.cutvertices, v))
        if cand[0] in b:
            raise ConstructionError(f"the only A-vertex of block {bi} is a cutvertex of the string")
        chosen.append((S.blocks.index(bi), cand[0]))
    chosen_set = {a for _, a in chosen}

    def holds_chosen(c: _StringCycle) -> bool:
        return bool(chosen_set & set(c.vertices()))

    for pos, a in chosen:
        if any(a in c.vertices() for c in cycles):
            continue
        B = bt.blocks[S.blocks[pos]]
        used = set()
        for c in cycles:
            used |= set(path_edges(c.segs[pos]))
        on = {v: i for i, c in enumerate(cycles) for v in c.segs[pos]}
        fan = vertex_disjoint_fan(G.adj, a, set(on), allowed=B, limit=2, blocked_edges=used)
        if len(fan) < 2:
            raise ConstructionError(f"no path from {a} to the cycle family")
        P = fan[0][::-1] + fan[1][1:]
        ci = next(i for i, c in enumerate(cycles) if P[0] in c.segs[pos])
        cj = ci if P[-1] in cycles[ci].segs[pos] else \
            next(i for i, c in enumerate(cycles) if P[-1] in c.segs[pos])
        C, C2 = cycles[ci], cycles[cj]
        local = set(path_edges(C.segs[pos])) | set(path_edges(C2.segs[pos])) | set(path_edges(P))
        Hg = LabeledGraph(G.n, frozenset(local), G.A)
        r = abc_path(Hg, b[pos], a, b[pos + 1])
        if not isinstance(r, ABCPath):
            raise ConstructionError(f"no b-a-b path through {a}")
        new = _StringCycle(list(C.segs), C.back)
        new.segs[pos] = list(r.path)
        if cj == ci:
            cycles[ci] = new
            continue
        if not holds_chosen(C2):
            cycles[ci] = new
            del cycles[cj]
            continue
        di = next((i for i, c in enumerate(cycles) if i not in (ci, cj) and not holds_chosen(c)), None)
        if di is None:
            raise ConstructionError("no spare cycle left for the repair step")
        fixed = _StringCycle(list(C2.segs), C2.back)
        fixed.segs[pos] = list(cycles[di].segs[pos])
        cycles[ci] = new
        cycles[cj] = fixed
        del cycles[di]

    # a cycle may pick up several chosen vertices; hand the extra block
    # segments to spare cycles (all cycles cross b_0..b_l in order, so
    # swapping the segments of one block keeps both cycles simple)
    for pos, a in chosen:
        ci = next(i for i, c in enumerate(cycles) if a in c.segs[pos])
        others = chosen_set & set(cycles[ci].vertices()) - set(cycles[ci].segs[pos])
        if not others:
            continue
        di = next((i for i, c in enumerate(cycles) if not holds_chosen(c)), None)
        if di is None:
            raise ConstructionError("no spare cycle left to separate the chosen A-vertices")
        cycles[ci].segs[pos], cycles[di].segs[pos] = cycles[di].segs[pos], cycles[ci].segs[pos]

    with_a = [c.cycle() for c in cycles if holds_chosen(c)]
    out: List[Cycle] = []
    i = 0
    while len(out) < k and i + 1 < len(with_a):
        cyc = theta_from_two_cycles(with_a[i], with_a[i + 1], A) or \
            theta_from_two_cycles(with_a[i + 1], with_a[i], A)
        if cyc is None:
            raise ConstructionError("paired cycles do not contain a suitable theta")
        out.append(cyc)
        i += 2
    if len(out) < k:
        raise ConstructionError(f"only {len(with_a)} cycles carry the chosen A-vertices")
    return Packing(k, tuple(out), "string-cycles")
