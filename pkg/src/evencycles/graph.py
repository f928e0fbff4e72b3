"""Labeled simple graphs, the edge-list file format, block trees and surgery.

Vertices are dense integer ids ``0..n-1``.  Graphs are immutable; every
surgery operation returns a fresh graph together with an id mapping so that
callers can trace original vertices and edges.
"""
from __future__ import annotations

import dataclasses
from collections import deque
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class DisconnectedError(GraphError):
    def __init__(self, components):
        self.components = [sorted(c) for c in components]
        super().__init__(f"graph is disconnected; components: {self.components}")


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclasses.dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: FrozenSet[Edge]
    A: FrozenSet[int] = frozenset()
    z: Optional[int] = None

    def __post_init__(self):
        edges = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} out of range for n={self.n}")
            edges.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "A", frozenset(self.A))
        for a in self.A:
            if not 0 <= a < self.n:
                raise GraphError(f"A-vertex {a} out of range")
        if self.z is not None and not 0 <= self.z < self.n:
            raise GraphError(f"z={self.z} out of range")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], A=(), z=None):
        return cls(n, frozenset(norm_edge(u, v) for u, v in edges), frozenset(A), z)

    @cached_property
    def adj(self) -> Dict[int, Tuple[int, ...]]:
        nbrs: Dict[int, list] = {v: [] for v in range(self.n)}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.sorted_edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def with_labels(self, A=None, z=...) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges, self.A if A is None else frozenset(A),
                            self.z if z is ... else z)

    def remove_edges(self, F: Iterable[Edge]) -> "LabeledGraph":
        drop = {norm_edge(*e) for e in F}
        return LabeledGraph(self.n, self.edges - drop, self.A, self.z)

    def add_edges(self, extra: Iterable[Edge]) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges | {norm_edge(*e) for e in extra}, self.A, self.z)

    def induced(self, vertices: Iterable[int]) -> Tuple["LabeledGraph", List[int]]:
        """Induced subgraph relabeled to dense ids; returns (graph, new->old list)."""
        old = sorted(set(vertices))
        new_of = {v: i for i, v in enumerate(old)}
        edges = [(new_of[u], new_of[v]) for u, v in self.edges if u in new_of and v in new_of]
        A = [new_of[a] for a in self.A if a in new_of]
        z = new_of.get(self.z) if self.z is not None else None
        return LabeledGraph.from_edges(len(old), edges, A, z), old

    def components(self, removed: Iterable[int] = ()) -> List[List[int]]:
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps


@dataclasses.dataclass(frozen=True, order=True)
class Cycle:
    """A cycle stored in canonical rotation: smallest vertex first, then its
    smaller cycle-neighbour."""
    vertices: Tuple[int, ...]

    @classmethod
    def canonical(cls, seq: Sequence[int]) -> "Cycle":
        seq = list(seq)
        if len(seq) < 3:
            raise GraphError(f"cycle too short: {seq}")
        if len(set(seq)) != len(seq):
            raise GraphError(f"repeated vertex in cycle {seq}")
        i = seq.index(min(seq))
        rot = seq[i:] + seq[:i]
        if rot[-1] < rot[1]:
            rot = [rot[0]] + rot[:0:-1]
        return cls(tuple(rot))

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self) -> FrozenSet[Edge]:
        vs = self.vertices
        return frozenset(norm_edge(vs[i - 1], vs[i]) for i in range(len(vs)))

    def is_in(self, G: LabeledGraph) -> bool:
        return all(e in G.edges for e in self.edges)

    def meets(self, S) -> bool:
        return any(v in S for v in self.vertices)

    def to_json(self) -> List[int]:
        return list(self.vertices)


# ---------------------------------------------------------------- file format

def parse_graph(text: str) -> LabeledGraph:
    n = m = None
    edges: Dict[Edge, int] = {}
    A = set()
    z = None
    z_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind, args = tok[0], tok[1:]
        try:
            nums = [int(t) for t in args]
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {raw!r}") from None
        if kind == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if len(nums) != 2 or nums[0] < 0 or nums[1] < 0:
                raise ParseError(lineno, "header must be 'p <n> <m>'")
            n, m = nums
            continue
        if n is None:
            raise ParseError(lineno, "missing 'p' header before data")
        if any(not 0 <= x < n for x in nums):
            raise ParseError(lineno, f"vertex id out of range 0..{n - 1}")
        if kind == "e":
            if len(nums) != 2:
                raise ParseError(lineno, "edge line must be 'e <u> <v>'")
            u, v = nums
            if u == v:
                raise ParseError(lineno, f"loop at vertex {u}")
            e = norm_edge(u, v)
            if e in edges:
                raise ParseError(lineno, f"duplicate edge {e} (first on line {edges[e]})")
            edges[e] = lineno
        elif kind == "a":
            if len(nums) != 1:
                raise ParseError(lineno, "A-mark must be 'a <v>'")
            A.add(nums[0])
        elif kind == "z":
            if len(nums) != 1:
                raise ParseError(lineno, "z-mark must be 'z <v>'")
            if z is not None:
                raise ParseError(lineno, f"multiple z lines (first on line {z_line})")
            z, z_line = nums[0], lineno
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    if n is None:
        raise ParseError(0, "missing 'p' header")
    if len(edges) != m:
        raise ParseError(0, f"header declares {m} edges, found {len(edges)}")
    return LabeledGraph(n, frozenset(edges), frozenset(A), z)


def serialize_graph(G: LabeledGraph) -> str:
    lines = [f"p {G.n} {G.m}"]
    lines += [f"e {u} {v}" for u, v in G.sorted_edges]
    lines += [f"a {a}" for a in sorted(G.A)]
    if G.z is not None:
        lines.append(f"z {G.z}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- block tree

@dataclasses.dataclass(frozen=True)
class BlockTree:
    """Blocks and cutvertices of a connected graph.

    Tree nodes are ``("B", i)`` for ``blocks[i]`` and ``("c", v)`` for a
    cutvertex ``v``.
    """
    blocks: Tuple[FrozenSet[int], ...]
    block_edges: Tuple[FrozenSet[Edge], ...]
    cutvertices: FrozenSet[int]
    tree_edges: Tuple[Tuple[int, int], ...]  # (block index, cutvertex)

    @cached_property
    def adj(self) -> Dict[tuple, Tuple[tuple, ...]]:
        out: Dict[tuple, list] = {("B", i): [] for i in range(len(self.blocks))}
        for c in self.cutvertices:
            out[("c", c)] = []
        for i, c in self.tree_edges:
            out[("B", i)].append(("c", c))
            out[("c", c)].append(("B", i))
        return {k: tuple(sorted(v)) for k, v in out.items()}

    @cached_property
    def blocks_of(self) -> Dict[int, Tuple[int, ...]]:
        out: Dict[int, list] = {}
        for i, B in enumerate(self.blocks):
            for v in B:
                out.setdefault(v, []).append(i)
        return {v: tuple(bs) for v, bs in out.items()}

    def node_vertices(self, node) -> FrozenSet[int]:
        kind, x = node
        return self.blocks[x] if kind == "B" else frozenset([x])

    def path(self, s, t) -> List[tuple]:
        prev = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if x == t:
                break
            for y in self.adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        out = [t]
        while out[-1] != s:
            out.append(prev[out[-1]])
        return out[::-1]


def biconnected_blocks(G: LabeledGraph, removed: Iterable[int] = ()) -> List[Tuple[FrozenSet[int], FrozenSet[Edge]]]:
    """Blocks (vertex set, edge set) by iterative lowpoint DFS.

    Isolated vertices yield no block.  Bridges are returned as two-vertex
    blocks.
    """
    gone = set(removed)
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    out = []
    counter = 0
    for root in range(G.n):
        if root in gone or root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        estack: List[Edge] = []
        stack = [(root, -1, iter(G.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w in gone:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    estack.append((u, w))
                    stack.append((w, u, iter(G.adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    estack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    edges = set()
                    while True:
                        e = estack.pop()
                        edges.add(norm_edge(*e))
                        if e == (parent, u):
                            break
                    verts = frozenset(x for e in edges for x in e)
                    out.append((verts, frozenset(edges)))
    out.sort(key=lambda b: (min(b[0]), sorted(b[0])))
    return out


def block_tree(G: LabeledGraph, root_removed: Optional[int] = None) -> BlockTree:
    removed = () if root_removed is None else (root_removed,)
    comps = G.components(removed)
    if len(comps) > 1:
        raise DisconnectedError(comps)
    blocks = biconnected_blocks(G, removed)
    count: Dict[int, int] = {}
    for verts, _ in blocks:
        for v in verts:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c >= 2)
    tree_edges = tuple(sorted((i, v) for i, (verts, _) in enumerate(blocks)
                              for v in verts if v in cuts))
    if not blocks and comps:
        # single vertex: treat it as a trivial block
        blocks = [(frozenset(comps[0]), frozenset())]
    return BlockTree(tuple(b for b, _ in blocks), tuple(e for _, e in blocks), cuts, tree_edges)


# -------------------------------------------------------------------- surgery

def subdivide_edge(G: LabeledGraph, e: Edge, t: int) -> Tuple[LabeledGraph, List[int]]:
    """Replace edge ``e`` by a path of length ``t``.

    Returns the new graph and the path's vertex list from ``e[0]`` to ``e[1]``.
    New vertices get ids ``n, n+1, ...`` and are not in ``A``.
    """
    u, v = e
    if not G.has_edge(u, v):
        raise GraphError(f"edge {e} not in graph")
    if t < 1:
        raise GraphError("subdivision length must be >= 1")
    if t == 1:
        return G, [u, v]
    new = list(range(G.n, G.n + t - 1))
    path = [u, *new, v]
    edges = set(G.edges)
    edges.discard(norm_edge(u, v))
    edges.update(norm_edge(path[i], path[i + 1]) for i in range(t))
    return LabeledGraph(G.n + t - 1, frozenset(edges), G.A, G.z), path


def suppress_degree_two(G: LabeledGraph, protect: Iterable[int] = ()) -> Tuple[LabeledGraph, Dict[int, int]]:
    """Suppress unprotected degree-2 vertices until none can be suppressed.

    Steps that would create a parallel edge are skipped.  Returns the new
    graph and a map old id -> new id for surviving vertices.
    """
    protect = set(protect)
    nbrs = {v: set(G.adj[v]) for v in range(G.n)}
    alive = set(range(G.n))
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if v in protect or len(nbrs[v]) != 2:
                continue
            x, y = sorted(nbrs[v])
            if y in nbrs[x]:
                continue
            nbrs[x].discard(v)
            nbrs[y].discard(v)
            nbrs[x].add(y)
            nbrs[y].add(x)
            del nbrs[v]
            alive.discard(v)
            changed = True
    keep = sorted(alive)
    new_of = {v: i for i, v in enumerate(keep)}
    edges = {norm_edge(new_of[u], new_of[w]) for u in keep for w in nbrs[u]}
    A = {new_of[a] for a in G.A if a in new_of}
    z = new_of.get(G.z) if G.z is not None else None
    return LabeledGraph(len(keep), frozenset(edges), frozenset(A), z), new_of


def bfs_path(adj, s: int, targets, allowed=None, blocked_edges=()) -> Optional[List[int]]:
    """Shortest path from ``s`` to any vertex of ``targets`` (smallest-id
    neighbours first); ``allowed`` restricts intermediate and end vertices."""
    targets = set(targets)
    blocked = {norm_edge(*e) for e in blocked_edges}
    if s in targets:
        return [s]
    prev = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w in prev or (allowed is not None and w not in allowed):
                continue
            if blocked and norm_edge(u, w) in blocked:
                continue
            prev[w] = u
            if w in targets:
                out = [w]
                while out[-1] != s:
                    out.append(prev[out[-1]])
                return out[::-1]
            queue.append(w)
    return None


def path_edges(path: Sequence[int]) -> List[Edge]:
    return [norm_edge(path[i], path[i + 1]) for i in range(len(path) - 1)]
