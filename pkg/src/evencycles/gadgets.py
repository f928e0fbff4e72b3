"""Walls and the two gadget families on which the edge version of the
packing/covering duality fails: long even A-cycles, and A-cycles of length
divisible by m > 2.

Wall encoding (``rows`` = R, ``cols`` = C), vertices at integer (x, y):

* bottom row y = 0: x = 1 .. 2C+1
* rows 1 .. R-1:    x = 0 .. 2C+1
* top row y = R:    x = s .. s+2C with s = R mod 2
* horizontal edges join consecutive x within a row
* rungs join (x, y)-(x, y+1) at x = 2i+1 for even y, x = 2i for odd y (i = 0..C)

Colour classes: U = odd x+y, V = even x+y.
"""
from __future__ import annotations

import dataclasses
from typing import Dict, FrozenSet, List, Optional, Tuple

from .budget import OracleBudget
from .cycles import CyclePredicate, PreconditionError, enumerate_cycles
from .graph import Edge, GraphError, LabeledGraph, norm_edge, suppress_degree_two
from .oracles import packing_of_cycles


@dataclasses.dataclass(frozen=True)
class WallSpec:
    rows: int
    cols: int
    coords: Tuple[Tuple[int, int], ...]   # vertex id -> (x, y)

    @property
    def U(self) -> FrozenSet[int]:
        return frozenset(i for i, (x, y) in enumerate(self.coords) if (x + y) % 2)

    @property
    def V(self) -> FrozenSet[int]:
        return frozenset(i for i, (x, y) in enumerate(self.coords) if (x + y) % 2 == 0)

    def top(self) -> List[int]:
        return [i for i, (_, y) in enumerate(self.coords) if y == self.rows]


def elementary_wall(rows: int, cols: int) -> Tuple[LabeledGraph, WallSpec]:
    if rows < 2 or cols < 2:
        raise PreconditionError("a wall needs at least 2 rows and 2 columns")
    R, C = rows, cols
    shift = R % 2
    xs = {0: range(1, 2 * C + 2), R: range(shift, shift + 2 * C + 1)}
    coords = []
    for y in range(R + 1):
        for x in xs.get(y, range(0, 2 * C + 2)):
            coords.append((x, y))
    idx = {c: i for i, c in enumerate(coords)}
    edges = []
    for (x, y), i in idx.items():
        if (x + 1, y) in idx:
            edges.append((i, idx[(x + 1, y)]))
    for y in range(R):
        for i in range(C + 1):
            x = 2 * i + 1 if y % 2 == 0 else 2 * i
            edges.append((idx[(x, y)], idx[(x, y + 1)]))
    return LabeledGraph.from_edges(len(coords), edges), WallSpec(R, C, tuple(coords))


@dataclasses.dataclass(frozen=True)
class GadgetSpec:
    h: int = 1
    wall_size: Optional[int] = None   # desk-scale override of the 10h x 10h wall
    ell: int = 5
    m: Optional[int] = None

    def __post_init__(self):
        if self.ell < 5:
            raise PreconditionError("ell must be at least 5")
        if self.m is not None and self.m <= 2:
            raise PreconditionError("modulus must exceed 2")
        if self.h < 1:
            raise PreconditionError("h must be positive")

    @property
    def size(self) -> int:
        return self.wall_size if self.wall_size is not None else 10 * self.h

    def predicate(self) -> CyclePredicate:
        if self.m is not None:
            return CyclePredicate(meets_A=True, modulus=(self.m, 0))
        return CyclePredicate(even=True, meets_A=True, min_length=self.ell)

    def to_json(self):
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class GadgetInfo:
    """Id-maps of a generated gadget."""
    spec: GadgetSpec
    wall: Dict[int, Tuple[int, int]]          # vertex id -> wall coordinate
    u: int
    v: int
    A: Tuple[int, ...]
    top_edges: Tuple[Edge, ...]
    # original gadget edge (in long-gadget ids) -> path in this graph
    paths: Dict[Edge, Tuple[int, ...]] = dataclasses.field(default_factory=dict)
    base: Optional["GadgetInfo"] = None      # the long gadget a mod gadget was built from

    def to_json(self):
        out = {"spec": self.spec.to_json(), "u": self.u, "v": self.v, "A": list(self.A),
               "wall": [[k, *c] for k, c in sorted(self.wall.items())],
               "top_edges": [list(e) for e in self.top_edges]}
        if self.paths:
            out["paths"] = [{"edge": list(e), "path": list(p)} for e, p in sorted(self.paths.items())]
        return out


def long_gadget(spec: GadgetSpec) -> Tuple[LabeledGraph, GadgetInfo]:
    s = spec.size
    if s % 2:
        raise PreconditionError("wall size must be even")
    W, ws = elementary_wall(s, s)
    top = ws.top()
    top_set = set(top)
    # keep the top-row vertices carrying a rung; suppress the rest
    protect = [i for i in range(W.n) if i not in top_set or W.degree(i) == 3
               or ws.coords[i][0] in (ws.coords[top[0]][0], ws.coords[top[-1]][0])]
    Ws, new_of = suppress_degree_two(W, protect)
    wall = {new_of[i]: ws.coords[i] for i in new_of}
    n = Ws.n
    u, v = n, n + 1
    A = tuple(range(n + 2, n + 2 + s))
    at = {c: i for i, c in wall.items()}
    edges = set(Ws.edges)
    for j in range(1, s, 2):
        edges.add(norm_edge(u, at[(0, j)]))
        edges.add(norm_edge(v, at[(2 * s + 1, j)]))
    for a in A:
        edges.add(norm_edge(u, a))
        edges.add(norm_edge(v, a))
    G = LabeledGraph(n + 2 + s, frozenset(edges), frozenset(A))
    top_edges = tuple(sorted(e for e in Ws.edges if wall[e[0]][1] == s and wall[e[1]][1] == s))
    return G, GadgetInfo(spec, wall, u, v, A, top_edges)


def mod_gadget(spec: GadgetSpec) -> Tuple[LabeledGraph, GadgetInfo]:
    if spec.m is None or spec.m <= 2:
        raise PreconditionError("mod gadget needs m > 2")
    m = spec.m
    base_spec = dataclasses.replace(spec, m=None)
    G0, info0 = long_gadget(base_spec)
    A = set(info0.A)
    top = set(info0.top_edges)
    nxt = G0.n
    edges = []
    paths: Dict[Edge, Tuple[int, ...]] = {}
    for e in G0.sorted_edges:
        a, b = e
        if (info0.u in e) and (set(e) & A):
            length = m - 2
        elif (info0.v in e and set(e) & A) or e in top:
            length = 1
        else:
            length = m
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        p = (a, *inner, b)
        paths[e] = p
        edges += [(p[i], p[i + 1]) for i in range(length)]
    G = LabeledGraph.from_edges(nxt, edges, A)
    info = GadgetInfo(spec, dict(info0.wall), info0.u, info0.v, info0.A, info0.top_edges,
                      paths, info0)
    return G, info


# ---------------------------------------------------------------- verification

@dataclasses.dataclass
class GadgetReport:
    checks: List[Tuple[str, bool, str]] = dataclasses.field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def get(self, name) -> bool:
        return next(ok for n, ok, _ in self.checks if n == name)

    def to_json(self):
        return {"passed": self.passed,
                "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks]}


def _parity_check(G: LabeledGraph, info: GadgetInfo) -> Tuple[bool, str]:
    """Colour the wall without its top-row edges; top edges must be
    monochromatic and u- and v-neighbours must get opposite colours."""
    wall = set(info.wall)
    top = {e for e in info.top_edges if e in G.edges}
    colour: Dict[int, int] = {}
    for s in sorted(wall):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.adj[x]:
                if y not in wall or norm_edge(x, y) in top:
                    continue
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return False, f"wall minus top row is not bipartite at {x}-{y}"
    comps = len({_root(G, wall, top, x) for x in wall})
    if comps != 1:
        return False, f"wall minus top row has {comps} components"
    if any(colour[a] != colour[b] for a, b in top if a in colour and b in colour):
        return False, "a top-row edge joins different colour classes"
    cu = {colour[x] for x in G.adj[info.u] if x in wall}
    cv = {colour[x] for x in G.adj[info.v] if x in wall}
    if len(cu) != 1 or len(cv) != 1 or cu == cv:
        return False, f"u-neighbour colours {cu}, v-neighbour colours {cv}"
    return True, f"{len(top)} top-row edges, all parity breaking"


def _root(G, wall, top, x):
    seen = {x}
    stack = [x]
    while stack:
        a = stack.pop()
        for b in G.adj[a]:
            if b in wall and b not in seen and norm_edge(a, b) not in top:
                seen.add(b)
                stack.append(b)
    return min(seen)


def verify_gadget(G: LabeledGraph, info: Optional[GadgetInfo],
                  budget: Optional[OracleBudget] = None) -> GadgetReport:
    if info is None:
        raise GraphError("gadget id-maps are required")
    rep = GadgetReport()
    pred = info.spec.predicate()
    if info.base is None:
        ok, detail = _parity_check(G, info)
        rep.add("parity", ok, detail)
        wall_vertices = set(info.wall)
        top = set(info.top_edges)
    else:
        G0, _ = long_gadget(info.base.spec)
        ok, detail = _parity_check(G0, info.base)
        rep.add("parity", ok, detail)
        rep.add("lengths", *_length_check(info))
        wall_vertices = set()
        for e, p in info.paths.items():
            if e[0] in info.wall or e[1] in info.wall:
                wall_vertices |= {x for x in p if x not in (info.u, info.v) and x not in info.A}
        top = {norm_edge(*info.paths[e]) for e in info.top_edges}
    budget = budget or OracleBudget(max_vertices=max(G.n, 64), max_cycles=10**7)
    cycles = enumerate_cycles(G, pred, budget=budget)
    rep.add("targets exist", bool(cycles), f"{len(cycles)} target cycles")
    cnt, _ = packing_of_cycles(G, cycles, k_target=2, budget=budget)
    rep.add("packing <= 1", cnt <= 1, f"packing number {'>= 2' if cnt >= 2 else cnt}")
    off = [c for c in cycles if not set(c.vertices) & wall_vertices]
    rep.add("targets meet wall", not off,
            f"cycle {list(off[0].vertices)} avoids the wall" if off else "")
    no_top = [c for c in cycles if not c.edges & top]
    rep.add("targets use top row", not no_top,
            f"cycle {list(no_top[0].vertices)} misses the top row" if no_top else "")
    if info.spec.size < 4:
        # u has a single wall neighbour, so one edge trivially meets every target
        return rep
    common = set(G.edges)
    for c in cycles:
        common &= c.edges
    rep.add("no single edge hits all", bool(cycles) and not common,
            f"edges on every target: {sorted(common)}" if common and cycles else "")
    return rep


def _length_check(info: GadgetInfo) -> Tuple[bool, str]:
    m = info.spec.m
    A = set(info.A)
    top = set(info.top_edges)
    for e, p in info.paths.items():
        length = len(p) - 1
        if info.u in e and set(e) & A:
            want = m - 2
        elif (info.v in e and set(e) & A) or e in top:
            want = 1
        else:
            want = m
        if length != want:
            return False, f"edge {e} became a path of length {length}, expected {want}"
    return True, f"{len(info.paths)} edges checked"


def bipartite_part_cycles(G: LabeledGraph, info: GadgetInfo):
    """Cycles of the subdivided complete bipartite part between {u, v} and A."""
    keep = {info.u, info.v, *info.A}
    for e, p in info.paths.items():
        if set(e) <= keep:
            keep |= set(p)
    H, old = G.induced(keep)
    return [tuple(old[x] for x in c.vertices) for c in enumerate_cycles(H)]
