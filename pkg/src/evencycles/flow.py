"""Unit-capacity max flow (BFS augmenting paths) and the Menger-type
queries built on it: edge-disjoint paths, internally vertex-disjoint fans,
minimum edge cuts.  Deterministic: neighbours are scanned in sorted order.
"""
from __future__ import annotations

from collections import defaultdict, deque
from typing import Dict, Hashable, Iterable, List, Optional, Set, Tuple

from .graph import Edge, norm_edge


def _node_key(x):
    return (1, x) if isinstance(x, tuple) else (0, x)


class FlowNetwork:
    def __init__(self):
        self.cap: Dict[Tuple[Hashable, Hashable], int] = defaultdict(int)
        self.out: Dict[Hashable, list] = defaultdict(list)

    def add_arc(self, u, v, c: int = 1):
        self.out[u].append(v)
        self.out[v].append(u)
        self.cap[(u, v)] += c
        self.cap.setdefault((v, u), 0)

    def add_edge(self, u, v, c: int = 1):
        self.add_arc(u, v, c)
        self.add_arc(v, u, c)

    def max_flow(self, s, t, limit: Optional[int] = None) -> int:
        for u in self.out:
            self.out[u] = sorted(set(self.out[u]), key=_node_key)
        self.flow: Dict[Tuple[Hashable, Hashable], int] = defaultdict(int)
        total = 0
        while limit is None or total < limit:
            prev = {s: None}
            queue = deque([s])
            while queue and t not in prev:
                u = queue.popleft()
                for w in self.out[u]:
                    if w not in prev and self.cap[(u, w)] - self.flow[(u, w)] > 0:
                        prev[w] = u
                        queue.append(w)
            if t not in prev:
                break
            w = t
            while prev[w] is not None:
                u = prev[w]
                self.flow[(u, w)] += 1
                self.flow[(w, u)] -= 1
                w = u
            total += 1
        self.value = total
        return total

    def residual_reach(self, s) -> Set[Hashable]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self.out[u]:
                if w not in seen and self.cap[(u, w)] - self.flow[(u, w)] > 0:
                    seen.add(w)
                    queue.append(w)
        return seen

    def decompose(self, s, t) -> List[List[Hashable]]:
        """Split the current flow into s-t paths (flow cycles are dropped)."""
        pos = {a: f for a, f in self.flow.items() if f > 0}
        paths = []
        while True:
            nxt = [w for w in self.out[s] if pos.get((s, w), 0) > 0]
            if not nxt:
                break
            walk = [s]
            u = s
            while u != t:
                w = next(w for w in self.out[u] if pos.get((u, w), 0) > 0)
                pos[(u, w)] -= 1
                if w in walk:
                    walk = walk[:walk.index(w) + 1]
                else:
                    walk.append(w)
                u = w
            paths.append(walk)
        return paths


def edge_disjoint_paths(edges: Iterable[Edge], s: int, t: int, limit: Optional[int] = None) -> List[List[int]]:
    """Maximum (or ``limit``) set of pairwise edge-disjoint s-t paths."""
    net = FlowNetwork()
    for u, v in sorted({norm_edge(*e) for e in edges}):
        net.add_edge(u, v)
    net.max_flow(s, t, limit)
    return [list(p) for p in net.decompose(s, t)]


def min_edge_cut(edges: Iterable[Edge], s: int, t: int, limit: Optional[int] = None) -> Tuple[int, Optional[List[Edge]]]:
    """Return (flow value, cut).  The cut is ``None`` when the flow reached
    ``limit`` (no cut of size < limit exists)."""
    edges = sorted({norm_edge(*e) for e in edges})
    net = FlowNetwork()
    for u, v in edges:
        net.add_edge(u, v)
    if s == t:
        return 0, []
    value = net.max_flow(s, t, limit)
    if limit is not None and value >= limit:
        return value, None
    side = net.residual_reach(s)
    cut = [e for e in edges if (e[0] in side) != (e[1] in side)]
    return value, cut


def vertex_disjoint_fan(adj, s: int, targets, allowed=None, limit: Optional[int] = None,
                        blocked_edges=()) -> List[List[int]]:
    """Paths from ``s`` to distinct vertices of ``targets``, pairwise sharing
    only ``s``.  Each path stops at its first target vertex."""
    targets = set(targets)
    blocked = {norm_edge(*e) for e in blocked_edges}
    net = FlowNetwork()
    sink = ("sink",)
    verts = [v for v in adj if allowed is None or v in allowed or v == s]
    for v in verts:
        if v != s:
            net.add_arc(("in", v), ("out", v), 1)
    for u in verts:
        if u in targets and u != s:
            net.add_arc(("out", u), sink, 1)
            continue
        for w in adj[u]:
            if w == s or (allowed is not None and w not in allowed and w != s):
                continue
            if norm_edge(u, w) in blocked:
                continue
            src = ("out", u) if u != s else ("s",)
            net.add_arc(src, ("in", w), 1)
    net.max_flow(("s",), sink, limit)
    paths = []
    for p in net.decompose(("s",), sink):
        vs = [s] + [x[1] for x in p[1:-1] if x[0] == "out"]
        paths.append(vs)
    return paths
