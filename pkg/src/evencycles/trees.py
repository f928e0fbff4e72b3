"""Witness-producing algorithms for tree bounds: edge-disjoint subtrees
collecting Z-vertices, vertex-disjoint three-leaf subtrees, and the
degree / three-leaf packing / long path trichotomy.

All tie-breaks are deepest-first, then smallest id.
"""
from __future__ import annotations

import dataclasses
from collections import deque
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from .cycles import PreconditionError


@dataclasses.dataclass(frozen=True)
class Tree:
    adj: Dict[Hashable, Tuple[Hashable, ...]]

    def __post_init__(self):
        adj = {v: tuple(sorted(ns)) for v, ns in self.adj.items()}
        object.__setattr__(self, "adj", adj)
        m = sum(len(ns) for ns in adj.values())
        if m % 2 or m // 2 != len(adj) - 1 and adj:
            raise ValueError("not a tree: |E| != |V| - 1")
        if adj and len(_bfs_order(adj, min(adj))) != len(adj):
            raise ValueError("not a tree: disconnected")

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[Hashable, Hashable]], vertices: Iterable[Hashable] = ()):
        adj: Dict[Hashable, list] = {v: [] for v in vertices}
        for u, v in edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        return cls(adj)

    @property
    def vertices(self) -> List[Hashable]:
        return sorted(self.adj)

    @property
    def edges(self) -> List[Tuple[Hashable, Hashable]]:
        return sorted((u, v) for u in self.adj for v in self.adj[u] if u < v)

    def degree(self, v) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adj.values()), default=0)

    @property
    def leaves(self) -> List[Hashable]:
        return [v for v in self.vertices if len(self.adj[v]) == 1]

    def longest_path(self) -> List[Hashable]:
        if not self.adj:
            return []
        far, _ = _farthest(self.adj, min(self.adj))
        other, prev = _farthest(self.adj, far)
        path = [other]
        while path[-1] != far:
            path.append(prev[path[-1]])
        return path

    @property
    def diameter(self) -> int:
        return max(len(self.longest_path()) - 1, 0)

    def subtree(self, vertices: Iterable[Hashable]) -> "Tree":
        vs = set(vertices)
        return Tree({v: tuple(w for w in self.adj[v] if w in vs) for v in vs})


def _bfs_order(adj, root):
    seen = {root}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def _farthest(adj, s):
    dist = {s: 0}
    prev = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                prev[w] = u
                queue.append(w)
    best = min(dist, key=lambda v: (-dist[v], v))
    return best, prev


def _rooted(adj, root):
    parent = {root: None}
    depth = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                depth[w] = depth[u] + 1
                order.append(w)
                queue.append(w)
    children = {v: [] for v in order}
    for v in order[1:]:
        children[parent[v]].append(v)
    return parent, depth, order, children


@dataclasses.dataclass(frozen=True)
class Subtree:
    vertices: FrozenSet[Hashable]
    edges: FrozenSet[Tuple[Hashable, Hashable]]


def subtrees_meeting_Z(T: Tree, Z: Iterable[Hashable], s: int) -> List[Subtree]:
    """Greedy edge-disjoint subtrees, each with at least ``s`` vertices of Z.

    Repeatedly take a deepest vertex ``v`` whose remaining subtree holds at
    least ``s`` unused Z-vertices, join child branches of ``v`` (in id order)
    until ``s`` are collected, and cut those branches off.  Each Z-vertex is
    counted in at most one output subtree.
    """
    if s < 1:
        raise PreconditionError("s must be positive")
    Z = set(Z) & set(T.adj)
    if not Z or len(Z) < s:
        return []
    root = min(T.adj)
    parent, depth, order, children = _rooted(T.adj, root)
    alive_child = {v: list(children[v]) for v in order}
    unused = set(Z)
    out: List[Subtree] = []

    def branch(w):
        """Vertices of the live branch at w whose paths lead to unused Z."""
        verts, edges, cnt = [], [], 0
        stack = [w]
        while stack:
            x = stack.pop()
            verts.append(x)
            if x in unused:
                cnt += 1
            for y in alive_child[x]:
                if counts[y]:
                    stack.append(y)
                    edges.append((x, y))
        return verts, edges, cnt

    while True:
        counts: Dict[Hashable, int] = {}
        for v in reversed(order):
            counts[v] = (v in unused) + sum(counts[w] for w in alive_child[v])
        cands = [v for v in order if counts[v] >= s]
        if not cands:
            break
        v = min(cands, key=lambda x: (-depth[x], x))
        got = 1 if v in unused else 0
        verts, edges = [v], []
        taken = []
        for w in alive_child[v]:
            if got >= s:
                break
            bv, be, c = branch(w)
            if c == 0:
                continue
            got += c
            verts += bv
            edges += be + [(v, w)]
            taken.append(w)
        for w in taken:
            alive_child[v].remove(w)
        used_here = {x for x in verts if x in unused}
        unused -= used_here
        out.append(Subtree(frozenset(verts), frozenset(_ordered(e) for e in edges)))
    return out


def _ordered(e):
    u, v = e
    return (u, v) if u <= v else (v, u)


def three_leaf_subtrees(T: Tree) -> List[Subtree]:
    """Vertex-disjoint subtrees each holding three leaves of ``T``.

    Guarantees at least floor(s / (2 * maxdeg)) of them for ``s`` leaves.
    """
    if T.max_degree < 3:
        raise PreconditionError("maximum degree must be at least 3")
    leaves = set(T.leaves)
    adj = {v: set(ns) for v, ns in T.adj.items()}
    out: List[Subtree] = []
    while adj:
        root = min(adj)
        parent, depth, order, children = _rooted(adj, root)
        cnt: Dict[Hashable, int] = {}
        for v in reversed(order):
            cnt[v] = (v in leaves) + sum(cnt[w] for w in children[v])
        cands = [v for v in order if cnt[v] >= 3]
        if not cands:
            break
        v = min(cands, key=lambda x: (-depth[x], x))
        sub = []
        stack = [v]
        while stack:
            x = stack.pop()
            sub.append(x)
            stack.extend(children[x])
        subset = set(sub)
        out.append(Subtree(frozenset(sub), frozenset(_ordered((x, y)) for x in sub
                                                     for y in T.adj[x] if y in subset)))
        for x in sub:
            for y in adj.pop(x):
                if y in adj:
                    adj[y].discard(x)
        # prune leaves that are not leaves of T
        changed = True
        while changed:
            changed = False
            for x in sorted(adj):
                if x not in leaves and len(adj[x]) <= 1:
                    for y in adj.pop(x):
                        adj[y].discard(x)
                    changed = True
    return out


@dataclasses.dataclass(frozen=True)
class MaxDegree:
    vertex: Hashable


@dataclasses.dataclass(frozen=True)
class ThreeLeafPack:
    subtrees: Tuple[Subtree, ...]


@dataclasses.dataclass(frozen=True)
class LongPath:
    path: Tuple[Hashable, ...]


TrichotomyWitness = (MaxDegree, ThreeLeafPack, LongPath)


def tree_trichotomy(T: Tree, alpha: int, beta: int, gamma: int):
    """Degree >= alpha, or beta disjoint three-leaf subtrees, or a path of
    length >= gamma; checked in that order."""
    if len(T.adj) < alpha * beta * gamma:
        raise PreconditionError(f"tree has {len(T.adj)} < {alpha * beta * gamma} vertices")
    if T.max_degree >= alpha:
        return MaxDegree(min(v for v in T.adj if T.degree(v) >= alpha))
    if T.max_degree >= 3:
        subs = three_leaf_subtrees(T)
        if len(subs) >= beta:
            return ThreeLeafPack(tuple(subs[:beta]))
    path = T.longest_path()
    if len(path) - 1 >= gamma:
        return LongPath(tuple(path))
    raise AssertionError("trichotomy exhausted; the tree-size bound was violated")


def check_witness(T: Tree, w, alpha: int, beta: int, gamma: int) -> Optional[str]:
    """Independent checker: ``None`` if valid, else a reason."""
    if isinstance(w, MaxDegree):
        return None if w.vertex in T.adj and T.degree(w.vertex) >= alpha else "degree too small"
    if isinstance(w, ThreeLeafPack):
        if len(w.subtrees) < beta:
            return "too few subtrees"
        leaves = set(T.leaves)
        seen = set()
        for st in w.subtrees:
            if st.vertices & seen:
                return "subtrees overlap"
            seen |= st.vertices
            if len(st.vertices & leaves) < 3:
                return "subtree with fewer than three leaves"
            if not _is_subtree(T, st):
                return "not a subtree"
        return None
    if isinstance(w, LongPath):
        p = w.path
        if len(p) - 1 < gamma or len(set(p)) != len(p):
            return "path too short or not simple"
        if any(p[i + 1] not in T.adj[p[i]] for i in range(len(p) - 1)):
            return "not a path of T"
        return None
    return "unknown witness"


def _is_subtree(T: Tree, st: Subtree) -> bool:
    vs = st.vertices
    if not vs:
        return False
    for u, v in st.edges:
        if v not in T.adj.get(u, ()) or u not in vs or v not in vs:
            return False
    if len(st.edges) != len(vs) - 1:
        return False
    adj: Dict[Hashable, list] = {v: [] for v in vs}
    for u, v in st.edges:
        adj[u].append(v)
        adj[v].append(u)
    return len(_bfs_order(adj, min(vs))) == len(vs)
