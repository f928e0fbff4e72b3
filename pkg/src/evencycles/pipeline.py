"""Shared state of the single-vertex pipeline: the block tree of G - z,
strings, the chosen A-blocks and the reduced tree built from them."""
from __future__ import annotations

import dataclasses
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .cycles import ThetaWitness, even_A_cycle_from_theta, theta_from_cycle_and_path
from .graph import BlockTree, Cycle, Edge, LabeledGraph, bfs_path, block_tree, norm_edge
from .trees import Tree


class SingleZViolation(Exception):
    """The input has an even A-cycle avoiding z (or breaks a structural fact
    that only fails when such a cycle exists)."""

    def __init__(self, msg: str, cycle: Optional[Cycle] = None):
        super().__init__(msg)
        self.cycle = cycle


class ConstructionError(RuntimeError):
    """A packing construction could not be completed.  ``fallback`` is an
    edge set that still meets every relevant cycle, but may exceed the
    bound."""

    def __init__(self, msg: str, fallback: FrozenSet[Edge] = frozenset()):
        super().__init__(msg)
        self.fallback = frozenset(fallback)


Node = Tuple[str, int]


@dataclasses.dataclass(frozen=True)
class StringPath:
    cutvertices: Tuple[int, ...]   # b_0 .. b_l
    blocks: Tuple[int, ...]        # block indices B_1 .. B_l

    def nodes(self) -> List[Node]:
        out: List[Node] = [("c", self.cutvertices[0])]
        for b, c in zip(self.blocks, self.cutvertices[1:]):
            out += [("B", b), ("c", c)]
        return out


@dataclasses.dataclass
class PipelineState:
    G: LabeledGraph
    z: int
    k: int

    @property
    def A(self) -> FrozenSet[int]:
        return self.G.A

    @cached_property
    def bt(self) -> BlockTree:
        return block_tree(self.G, root_removed=self.z)

    @cached_property
    def znbrs(self) -> FrozenSet[int]:
        return frozenset(self.G.adj[self.z])

    def block_degree(self, node) -> int:
        return len(self.bt.adj[node])

    def a_blocks(self) -> List[int]:
        return [i for i, B in enumerate(self.bt.blocks) if B & self.A]

    @cached_property
    def strings(self) -> List[StringPath]:
        return find_strings(self)

    @cached_property
    def A_S(self) -> List[int]:
        """One A-block per string: the first one."""
        return [next(b for b in S.blocks if self.bt.blocks[b] & self.A) for S in self.strings]

    @cached_property
    def A_Sbar(self) -> List[int]:
        inside = {b for S in self.strings for b in S.blocks}
        return [i for i in self.a_blocks() if i not in inside]

    @cached_property
    def keep(self) -> FrozenSet[Node]:
        return frozenset(("B", i) for i in self.A_S + self.A_Sbar)

    @cached_property
    def reduced_tree(self) -> Tree:
        return build_reduced_tree(self)

    def string_vertices(self, S: StringPath) -> Set[int]:
        return set().union(*(self.bt.blocks[b] for b in S.blocks))

    def string_edges(self, S: StringPath) -> Set[Edge]:
        return set().union(*(self.bt.block_edges[b] for b in S.blocks))


def find_strings(state: PipelineState) -> List[StringPath]:
    """All maximal strings of the block tree of G - z."""
    bt, A = state.bt, state.A
    ok = set()
    for node, nbrs in bt.adj.items():
        if len(nbrs) != 2:
            continue
        if node[0] == "B" and bt.blocks[node[1]] & state.znbrs:
            continue
        ok.add(node)
    seen: Set[Node] = set()
    out: List[StringPath] = []
    for start in sorted(ok):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in bt.adj[x]:
                if y in ok and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        # the component is a path; walk it from its smaller end
        ends = sorted(x for x in comp if sum(y in comp for y in bt.adj[x]) <= 1)
        order = [ends[0]]
        while True:
            nxt = [y for y in bt.adj[order[-1]] if y in comp and (len(order) < 2 or y != order[-2])]
            if not nxt:
                break
            order.append(nxt[0])
        cand = [i for i, x in enumerate(order)
                if x[0] == "B" and bt.blocks[x[1]] & A and 0 < i < len(order) - 1]
        if not cand:
            continue
        nodes = order[cand[0] - 1: cand[-1] + 2]
        S = StringPath(tuple(x[1] for x in nodes[0::2]), tuple(x[1] for x in nodes[1::2]))
        assert _is_string(state, S), S
        out.append(S)
    out.sort(key=lambda S: S.nodes())
    return out


def _is_string(state: PipelineState, S: StringPath) -> bool:
    bt = state.bt
    nodes = S.nodes()
    if any(n not in bt.adj for n in nodes):
        return False
    if any(nodes[i + 1] not in bt.adj[nodes[i]] for i in range(len(nodes) - 1)):
        return False
    if any(len(bt.adj[n]) != 2 for n in nodes):
        return False
    if any(bt.blocks[b] & state.znbrs for b in S.blocks):
        return False
    return bool(bt.blocks[S.blocks[0]] & state.A and bt.blocks[S.blocks[-1]] & state.A)


def build_reduced_tree(state: PipelineState) -> Tree:
    """Delete leaves outside the kept A-blocks and suppress unkept degree-2
    nodes, until neither applies."""
    keep = state.keep
    adj = {x: set(ys) for x, ys in state.bt.adj.items()}
    changed = True
    while changed:
        changed = False
        for x in sorted(adj):
            if x in keep or x not in adj:
                continue
            if len(adj[x]) <= 1:
                for y in adj.pop(x):
                    adj[y].discard(x)
                changed = True
            elif len(adj[x]) == 2:
                y1, y2 = sorted(adj.pop(x))
                adj[y1].discard(x)
                adj[y2].discard(x)
                adj[y1].add(y2)
                adj[y2].add(y1)
                changed = True
    return Tree({x: tuple(ys) for x, ys in adj.items()})


def reduced_tree_ok(state: PipelineState, T: Tree) -> bool:
    keep = state.keep
    if not keep <= set(T.adj):
        return False
    return all(x in keep for x in T.adj if len(T.adj[x]) <= 2)


# ------------------------------------------------------------------- helpers

def theta_cycle(paths: Sequence[Sequence[int]], A) -> Cycle:
    """Even A-cycle of the theta graph formed by ``paths``."""
    return even_A_cycle_from_theta(ThetaWitness.build(paths, A), A)


def steiner3(adj, allowed, terminals: Sequence[int]) -> Tuple[int, List[List[int]]]:
    """A tree in ``allowed`` joining three terminals, as its centre ``m`` and
    the three paths from ``m`` to each terminal."""
    x1, x2, x3 = terminals
    p12 = bfs_path(adj, x1, {x2}, allowed=allowed)
    if p12 is None:
        raise ConstructionError("terminals are not connected")
    q = bfs_path(adj, x3, set(p12), allowed=allowed)
    if q is None:
        raise ConstructionError("terminals are not connected")
    m = q[-1]
    i = p12.index(m)
    return m, [p12[i::-1], p12[i:], q[::-1]]


def tree_path(adj, s, t) -> List:
    """The unique s-t path in a tree given by adjacency."""
    prev = {s: None}
    stack = [s]
    while stack:
        x = stack.pop()
        if x == t:
            break
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    out = [t]
    while out[-1] != s:
        out.append(prev[out[-1]])
    return out[::-1]


def theta_from_two_cycles(C1: Cycle, C2: Cycle, A) -> Optional[Cycle]:
    """Even A-cycle of ``C1`` plus a ``C1``-path of ``C2`` through A."""
    on1 = set(C1.vertices)
    vs = list(C2.vertices)
    n = len(vs)
    for i, a in enumerate(vs):
        if a not in A or a in on1:
            continue
        fwd, j = [a], i
        while True:
            j = (j + 1) % n
            fwd.append(vs[j])
            if vs[j] in on1 or j == i:
                break
        bwd, j = [a], i
        while True:
            j = (j - 1) % n
            bwd.append(vs[j])
            if vs[j] in on1 or j == i:
                break
        if fwd[-1] not in on1 or bwd[-1] not in on1 or fwd[-1] == bwd[-1]:
            continue
        P = bwd[::-1] + fwd[1:]
        try:
            theta = theta_from_cycle_and_path(C1, P, A)
        except Exception:
            continue
        if sum(theta.a_flags) >= 2:
            return even_A_cycle_from_theta(theta, A)
    return None


def violation_from_theta(msg: str, theta: ThetaWitness, A) -> SingleZViolation:
    return SingleZViolation(msg, even_A_cycle_from_theta(theta, A))
