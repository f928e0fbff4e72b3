"""Parity-aware cycle primitives.

Theta graphs and the even A-cycle they always contain, a-b-c paths (with
the single-vertex obstruction when none exists), and exhaustive cycle
enumeration under a closed predicate.
"""
from __future__ import annotations

import dataclasses
import sys
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from .budget import BudgetError, OracleBudget
from .flow import FlowNetwork
from .graph import Cycle, GraphError, LabeledGraph, bfs_path, norm_edge

DESK_SCALE_VERTICES = 64


class PreconditionError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class CyclePredicate:
    """Which cycles count as targets.  Serializable on purpose."""
    even: bool = False
    meets_A: bool = False
    min_length: int = 3
    modulus: Optional[Tuple[int, int]] = None  # (m, residue)

    def length_ok(self, length: int) -> bool:
        if length < self.min_length:
            return False
        if self.even and length % 2:
            return False
        if self.modulus is not None:
            m, r = self.modulus
            if length % m != r % m:
                return False
        return True

    def accepts(self, cycle: Cycle, A) -> bool:
        return self.length_ok(len(cycle)) and (not self.meets_A or cycle.meets(A))

    def to_json(self):
        return {"even": self.even, "meets_A": self.meets_A, "min_length": self.min_length,
                "modulus": list(self.modulus) if self.modulus else None}

    @classmethod
    def from_json(cls, d):
        mod = d.get("modulus")
        return cls(bool(d.get("even", False)), bool(d.get("meets_A", False)),
                   int(d.get("min_length", 3)), tuple(mod) if mod else None)


EVEN_A = CyclePredicate(even=True, meets_A=True)


# ---------------------------------------------------------------- theta graphs

@dataclasses.dataclass(frozen=True)
class ThetaWitness:
    branch_u: int
    branch_v: int
    paths: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]
    a_flags: Tuple[bool, bool, bool]

    @classmethod
    def build(cls, paths: Sequence[Sequence[int]], A) -> "ThetaWitness":
        paths = tuple(tuple(p) for p in paths)
        if len(paths) != 3:
            raise GraphError("a theta graph has exactly three subdivided edges")
        u, v = paths[0][0], paths[0][-1]
        flags = tuple(any(x in A for x in p) for p in paths)
        theta = cls(u, v, paths, flags)
        theta.validate()
        return theta

    def validate(self):
        u, v = self.branch_u, self.branch_v
        if u == v:
            raise GraphError("branch vertices coincide")
        seen = set()
        for p in self.paths:
            if p[0] != u or p[-1] != v or len(p) < 2:
                raise GraphError(f"path {p} does not join the branch vertices")
            inner = set(p[1:-1])
            if len(inner) != len(p) - 2 or inner & {u, v}:
                raise GraphError(f"path {p} is not simple")
            if inner & seen:
                raise GraphError("subdivided edges are not internally disjoint")
            seen |= inner
        if sum(len(p) == 2 for p in self.paths) > 1:
            raise GraphError("two subdivided edges of length 1 would be parallel")

    @property
    def lengths(self) -> Tuple[int, int, int]:
        return tuple(len(p) - 1 for p in self.paths)

    @property
    def edges(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(norm_edge(p[i], p[i + 1]) for p in self.paths for i in range(len(p) - 1))


def even_A_cycle_from_theta(theta: ThetaWitness, A) -> Cycle:
    """The even cycle formed by two subdivided edges of ``theta``.

    Requires two subdivided edges meeting ``A``; then every union of two
    subdivided edges is an A-cycle, and one of the three has even length.
    Ties go to the lexicographically smallest index pair.
    """
    flags = [any(x in A for x in p) for p in theta.paths]
    if sum(flags) < 2:
        raise PreconditionError("fewer than two subdivided edges meet A")
    for i, j in ((0, 1), (0, 2), (1, 2)):
        p, q = theta.paths[i], theta.paths[j]
        if (len(p) + len(q)) % 2 == 0 and (flags[i] or flags[j]):
            return Cycle.canonical(list(p) + list(q[-2:0:-1]))
    raise AssertionError("three integers always have an even pairwise sum")


def theta_from_cycle_and_path(C: Cycle, P: Sequence[int], A) -> ThetaWitness:
    """Theta graph made of cycle ``C`` and a ``C``-path ``P``."""
    P = list(P)
    cv = list(C.vertices)
    pos = {v: i for i, v in enumerate(cv)}
    if len(P) < 2:
        raise GraphError("C-path needs at least one edge")
    x, y = P[0], P[-1]
    if x not in pos or y not in pos:
        raise GraphError("C-path endpoints must lie on the cycle")
    if x == y:
        raise GraphError("C-path endpoints coincide")
    if any(v in pos for v in P[1:-1]):
        raise GraphError("C-path touches the cycle internally")
    if len(P) == 2 and norm_edge(x, y) in C.edges:
        raise GraphError("C-path is an edge of the cycle")
    n = len(cv)
    i, j = pos[x], pos[y]
    fwd = [cv[(i + t) % n] for t in range((j - i) % n + 1)]
    bwd = [cv[(i - t) % n] for t in range((i - j) % n + 1)]
    return ThetaWitness.build([P, fwd, bwd], A)


# ------------------------------------------------------------------ a-b-c path

@dataclasses.dataclass(frozen=True)
class ABCPath:
    path: Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class SeparatorVertex:
    vertex: int


def _separator(G: LabeledGraph, a: int, b: int, c: int) -> SeparatorVertex:
    for x in range(G.n):
        if x == b:
            continue
        reach = G.components([x])
        comp = next(cc for cc in reach if b in cc)
        if not ({a, c} - {x}) & set(comp):
            return SeparatorVertex(x)
    raise AssertionError("no separating vertex although no a-b-c path was built")


def _two_paths_to_pair(G: LabeledGraph, a: int, b: int, c: int) -> List[List[int]]:
    """Two b-{a,c} paths, disjoint except at b and possibly a shared end, via
    unit vertex capacities with a and c merged into the sink."""
    net = FlowNetwork()
    sink = ("t",)
    ends = {a, c}
    for v in range(G.n):
        if v not in ends and v != b:
            net.add_arc(("in", v), ("out", v), 1)
    for v in ends:
        net.add_arc(("in", v), sink, 2)
    for u in range(G.n):
        if u in ends:
            continue
        src = ("out", u)
        for w in G.adj[u]:
            if w == b:
                continue
            net.add_arc(src, ("in", w), 1)
    net.max_flow(("out", b), sink, 2)
    paths = []
    for p in net.decompose(("out", b), sink):
        vs = [b] + [x[1] for x in p[1:-1] if x[0] == "out"] + [p[-2][1]]
        paths.append(vs)
    return paths


def abc_path(G: LabeledGraph, a: int, b: int, c: int) -> Union[ABCPath, SeparatorVertex]:
    """A path from ``a`` through ``b`` to ``c``, or a vertex other than ``b``
    separating ``b`` from ``{a, c}``."""
    if len({a, b, c}) != 3:
        raise PreconditionError("a, b, c must be distinct")
    paths = _two_paths_to_pair(G, a, b, c)
    if len(paths) < 2:
        return _separator(G, a, b, c)
    p1, p2 = paths
    if p1[-1] != p2[-1]:
        pa, pc = (p1, p2) if p1[-1] == a else (p2, p1)
        return ABCPath(tuple(pa[::-1] + pc[1:]))
    shared = p1[-1]
    other = a if shared == c else c
    # reroute: Q from b to the unused end, avoiding the shared end
    allowed = set(range(G.n)) - {shared}
    Q = bfs_path(G.adj, b, {other}, allowed=allowed)
    if Q is None:
        return _separator(G, a, b, c)
    on = {v: (0, i) for i, v in enumerate(p1)}
    on.update({v: (1, i) for i, v in enumerate(p2) if v not in on})
    rq = Q[::-1]
    k = next(i for i, v in enumerate(rq) if v in on)
    zv = rq[k]
    which, idx = on[zv]
    pz, po = (p1, p2) if which == 0 else (p2, p1)
    walk = rq[:k] + pz[idx::-1] + po[1:]
    if other == c:
        walk = walk[::-1]
    assert walk[0] == a and walk[-1] == c and len(set(walk)) == len(walk)
    return ABCPath(tuple(walk))


# ---------------------------------------------------------------- enumeration

def enumerate_cycles(G: LabeledGraph, pred: CyclePredicate = CyclePredicate(),
                     cap: Optional[int] = None, budget: Optional[OracleBudget] = None,
                     A=None) -> List[Cycle]:
    """All cycles of ``G`` accepted by ``pred``, sorted by (length, vertices).

    With a finite ``cap`` the search stops after ``cap`` hits (in search
    order) and the hits are returned sorted.  Without a cap, more than
    ``DESK_SCALE_VERTICES`` vertices is refused.
    """
    A = G.A if A is None else frozenset(A)
    budget = budget or OracleBudget(max_vertices=max(DESK_SCALE_VERTICES, G.n))
    if cap is None and G.n > DESK_SCALE_VERTICES:
        raise BudgetError(f"{G.n} vertices exceeds desk-scale limit without a cap")
    if cap is not None and cap <= 0:
        return []
    clock = budget.clock()
    # A-vertices first: a cycle meeting A then has an A-vertex as its minimum
    order = sorted(range(G.n), key=lambda v: (v not in A, v)) if pred.meets_A else list(range(G.n))
    rank = {v: i for i, v in enumerate(order)}
    nbr_rank = [[rank[w] for w in G.adj[v]] for v in order]
    for lst in nbr_rank:
        lst.sort()
    starts = [rank[a] for a in sorted(A)] if pred.meets_A else range(G.n)
    found: List[Cycle] = []
    limit = cap if cap is not None else budget.max_cycles
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * G.n + 100))

    class _Done(Exception):
        pass

    def emit(path):
        found.append(Cycle.canonical([order[i] for i in path]))
        if len(found) >= limit:
            if cap is not None:
                raise _Done
            raise BudgetError(f"more than {budget.max_cycles} cycles")

    pending = 0
    try:
        for s in starts:
            path = [s]
            used = 1 << s

            def dfs(u):
                nonlocal used, pending
                pending += 1
                if pending >= 1024:
                    clock.tick(pending)
                    pending = 0
                for w in nbr_rank[u]:
                    if w <= s:
                        if w == s and len(path) >= 3 and path[1] < path[-1] \
                                and pred.length_ok(len(path)):
                            emit(path)
                        continue
                    if used >> w & 1:
                        continue
                    used |= 1 << w
                    path.append(w)
                    dfs(w)
                    path.pop()
                    used &= ~(1 << w)

            dfs(s)
    except _Done:
        pass
    finally:
        sys.setrecursionlimit(old)
    clock.tick(pending)
    found.sort(key=lambda c: (len(c), c.vertices))
    return found


def has_cycle(G: LabeledGraph, pred: CyclePredicate, A=None, budget=None) -> Optional[Cycle]:
    out = enumerate_cycles(G, pred, cap=1, A=A, budget=budget)
    return out[0] if out else None
