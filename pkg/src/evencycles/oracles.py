"""Exact desk-scale baselines: maximum edge-disjoint packing, minimum edge
and vertex hitting sets, and certificate verification.

Everything is exhaustive: cycles are enumerated under a predicate and the
combinatorial problem is solved by branch and bound over bitmasks.  A budget
overrun raises ``BudgetError``; no approximate answer is ever returned.
"""
from __future__ import annotations

import dataclasses
from typing import List, Optional, Sequence, Tuple

from .budget import BudgetError, OracleBudget
from .certificates import HittingSet, Packing
from .cycles import EVEN_A, CyclePredicate, enumerate_cycles
from .graph import Cycle, Edge, LabeledGraph, norm_edge

__all__ = ["BudgetError", "OracleBudget", "max_edge_disjoint_packing", "min_edge_hitting_set",
           "min_vertex_hitting_set", "verify_certificate", "VerificationReport",
           "packing_of_cycles", "edge_hitting_of_cycles", "vertex_hitting_of_cycles"]


def _popcount(x: int) -> int:
    return x.bit_count()


def _cycles(G, pred, budget, A):
    budget = budget or OracleBudget()
    budget.check_graph(G.n)
    return enumerate_cycles(G, pred, budget=budget, A=A), budget


def _edge_masks(G: LabeledGraph, cycles: Sequence[Cycle]) -> List[int]:
    idx = G.edge_index
    out = []
    for c in cycles:
        m = 0
        for e in c.edges:
            m |= 1 << idx[e]
        out.append(m)
    return out


# -------------------------------------------------------------------- packing

def max_edge_disjoint_packing(G: LabeledGraph, pred: CyclePredicate = EVEN_A,
                              k_target: Optional[int] = None,
                              budget: Optional[OracleBudget] = None,
                              A=None) -> Tuple[int, List[Cycle]]:
    """Exact min(k_target, packing number) with witness cycles."""
    cycles, budget = _cycles(G, pred, budget, A)
    return packing_of_cycles(G, cycles, k_target, budget, A)


def packing_of_cycles(G: LabeledGraph, cycles: Sequence[Cycle], k_target: Optional[int] = None,
                      budget: Optional[OracleBudget] = None, A=None) -> Tuple[int, List[Cycle]]:
    """Largest edge-disjoint subfamily of ``cycles`` (capped at ``k_target``)."""
    budget = budget or OracleBudget()
    masks = _edge_masks(G, cycles)
    n = len(cycles)
    clock = budget.clock()
    # per-edge bitset of cycles using it
    by_edge = [0] * G.m
    for i, m in enumerate(masks):
        x = m
        while x:
            low = x & -x
            by_edge[low.bit_length() - 1] |= 1 << i
            x ^= low
    conflict_cache = {}
    cache_ok = n <= 20000   # each entry is an n-bit integer

    def conflict(i):
        c = conflict_cache.get(i)
        if c is None:
            c = 0
            x = masks[i]
            while x:
                low = x & -x
                c |= by_edge[low.bit_length() - 1]
                x ^= low
            if cache_ok:
                conflict_cache[i] = c
        return c

    target = n if k_target is None else k_target
    best: List[int] = []
    by_len = {}
    for i, c in enumerate(cycles):
        by_len[len(c)] = by_len.get(len(c), 0) | 1 << i
    by_len = sorted(by_len.items())

    # charge each cycle to its first vertex, A-vertices first: cycles charged
    # to v in a packing use disjoint pairs of edges at v
    A = G.A if A is None else frozenset(A)
    rank = {v: (v not in A, v) for v in range(G.n)}
    charged = [0] * G.n
    for i, c in enumerate(cycles):
        charged[min(c.vertices, key=rank.__getitem__)] |= 1 << i
    idx = G.edge_index
    at = [0] * G.n
    for e, j in idx.items():
        at[e[0]] |= 1 << j
        at[e[1]] |= 1 << j
    verts = [v for v in range(G.n) if at[v]]

    def upper(cands):
        cnt = _popcount(cands)
        edges = 0
        if cnt > G.m:
            for j, users in enumerate(by_edge):
                if users & cands:
                    edges |= 1 << j
        else:
            x = cands
            while x:
                low = x & -x
                edges |= masks[low.bit_length() - 1]
                x ^= low
        min_len = next(L for L, mask in by_len if mask & cands)
        # a packing uses an even number of edges at every vertex
        usable = 0
        hub = 0
        for v in verts:
            half = _popcount(edges & at[v]) >> 1
            usable += half
            mine = cands & charged[v]
            if mine:
                hub += min(_popcount(mine), half)
        return min(cnt, usable // min_len, hub)

    def search(cands, chosen):
        # branch on the edge lying on the fewest candidates: either one of
        # those cycles is taken (at most one can be), or the edge stays unused
        nonlocal best
        clock.tick()
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands or len(best) >= target:
            return
        if len(chosen) + upper(cands) <= len(best):
            return
        pick, pick_cnt = 0, n + 1
        for users in by_edge:
            u = users & cands
            if u:
                c = _popcount(u)
                if c < pick_cnt:
                    pick, pick_cnt = u, c
                    if c == 1:
                        break
        x = pick
        while x and len(best) < target:
            low = x & -x
            x ^= low
            i = low.bit_length() - 1
            chosen.append(i)
            search(cands & ~conflict(i), chosen)
            chosen.pop()
        if len(best) < target:
            search(cands & ~pick, chosen)

    if n:
        search((1 << n) - 1, [])
    picked = [cycles[i] for i in best[:target]]
    return len(picked), picked


# --------------------------------------------------------------- hitting sets

def _minimal_sets(masks: List[int], antichain: bool = False) -> List[int]:
    uniq = sorted(set(masks), key=lambda m: (_popcount(m), m))
    if antichain:
        return uniq
    out: List[int] = []
    for m in uniq:
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def _min_hitting(masks: List[int], universe: int, clock, antichain: bool = False) -> List[int]:
    """Lexicographically smallest minimum-size set of element indices that
    meets every mask.

    The optimum size is found by iterative deepening, branching on the
    smallest unhit set.  At that size elements are then decided in increasing
    order with "take it" tried first, so the first set found is the
    lexicographic minimum.  Both searches prune with a disjoint-sets bound."""
    sets = _minimal_sets(masks, antichain)
    if not sets:
        return []
    full = (1 << universe) - 1

    def lower(unhit, allowed):
        # greedily pick pairwise disjoint sets (restricted to allowed elements)
        used = 0
        cnt = 0
        for s in unhit:
            s &= allowed
            if s & used == 0:
                used |= s
                cnt += 1
        return cnt

    def search(unhit, allowed, r):
        while True:
            clock.tick()
            if not unhit:
                return []
            if r == 0:
                return None
            live = 0
            common = allowed
            for s in unhit:
                s2 = s & allowed
                if not s2:
                    return None
                live |= s2
                common &= s2
            if r == 1:
                if not common:
                    return None
                return [(common & -common).bit_length() - 1]
            if lower(unhit, allowed) > r:
                return None
            # a minimum set never holds an element outside every unhit set
            low = live & -live
            rest = [s for s in unhit if not s & low]
            after = allowed & ~((low << 1) - 1)
            got = search(rest, after, r - 1)
            if got is not None:
                return [low.bit_length() - 1] + got
            allowed = after

    def feasible(unhit, allowed, r):
        # branch on the elements of the smallest unhit set
        clock.tick()
        if not unhit:
            return True
        if r == 0:
            return False
        best_s, best_c = 0, universe + 1
        for s in unhit:
            s2 = s & allowed
            if not s2:
                return False
            c = _popcount(s2)
            if c < best_c:
                best_s, best_c = s2, c
        if lower(unhit, allowed) > r:
            return False
        x = best_s
        while x:
            low = x & -x
            if feasible([s for s in unhit if not s & low], allowed, r - 1):
                return True
            allowed &= ~low
            x ^= low
        return False

    size = lower(sets, full)
    while not feasible(sets, full, size):
        size += 1
    return search(sets, full, size)


def min_edge_hitting_set(G: LabeledGraph, pred: CyclePredicate = EVEN_A,
                         budget: Optional[OracleBudget] = None, A=None) -> List[Edge]:
    cycles, budget = _cycles(G, pred, budget, A)
    return edge_hitting_of_cycles(G, cycles, budget)


def edge_hitting_of_cycles(G: LabeledGraph, cycles: Sequence[Cycle],
                           budget: Optional[OracleBudget] = None) -> List[Edge]:
    budget = budget or OracleBudget()
    # distinct cycles never have nested edge sets
    idx = _min_hitting(_edge_masks(G, cycles), G.m, budget.clock(), antichain=True)
    return [G.sorted_edges[i] for i in idx]


def min_vertex_hitting_set(G: LabeledGraph, pred: CyclePredicate = EVEN_A,
                           budget: Optional[OracleBudget] = None, A=None) -> List[int]:
    cycles, budget = _cycles(G, pred, budget, A)
    return vertex_hitting_of_cycles(G, cycles, budget)


def vertex_hitting_of_cycles(G: LabeledGraph, cycles: Sequence[Cycle],
                             budget: Optional[OracleBudget] = None) -> List[int]:
    budget = budget or OracleBudget()
    masks = []
    for c in cycles:
        m = 0
        for v in c.vertices:
            m |= 1 << v
        masks.append(m)
    return _min_hitting(masks, G.n, budget.clock())


# --------------------------------------------------------------- verification

@dataclasses.dataclass
class VerificationReport:
    status: str  # "pass" | "fail" | "inconclusive"
    checks: List[Tuple[str, bool, str]] = dataclasses.field(default_factory=list)
    counterexample: Optional[Cycle] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    def to_json(self):
        return {"status": self.status,
                "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks],
                "counterexample": self.counterexample.to_json() if self.counterexample else None}


def _structural_cycle_problem(G, c: Cycle) -> Optional[str]:
    vs = c.vertices
    if len(vs) < 3:
        return "fewer than three vertices"
    if len(set(vs)) != len(vs):
        return "repeated vertex"
    for i in range(len(vs)):
        if not (0 <= vs[i] < G.n) or not G.has_edge(vs[i - 1], vs[i]):
            return f"pair {vs[i - 1]}-{vs[i]} is not an edge"
    return None


def verify_certificate(G: LabeledGraph, k: int, cert, budget: Optional[OracleBudget] = None,
                       pred: CyclePredicate = EVEN_A, A=None) -> VerificationReport:
    """Check a certificate against the graph alone (tags are not trusted)."""
    A = G.A if A is None else frozenset(A)
    rep = VerificationReport("pass")
    if isinstance(cert, Packing):
        rep.add("count", len(cert.cycles) == k, f"{len(cert.cycles)} cycles, k={k}")
        used = set()
        disjoint = True
        for c in cert.cycles:
            prob = _structural_cycle_problem(G, c)
            rep.add(f"cycle {list(c.vertices)} structure", prob is None, prob or "")
            if prob is not None:
                continue
            rep.add(f"cycle {list(c.vertices)} predicate", pred.accepts(c, A),
                    f"length {len(c)}")
            if used & c.edges:
                disjoint = False
            used |= c.edges
        rep.add("edge-disjoint", disjoint)
    elif isinstance(cert, HittingSet):
        bad = [e for e in cert.edges if e not in G.edges]
        rep.add("edges in graph", not bad, f"foreign edges {bad}" if bad else "")
        if cert.bound_claimed is not None:
            rep.add("size within claimed bound", len(cert.edges) <= cert.bound_claimed,
                    f"|F|={len(cert.edges)} bound={cert.bound_claimed}")
        try:
            left = enumerate_cycles(G.remove_edges(cert.edges), pred, cap=1, budget=budget, A=A)
        except BudgetError as exc:
            rep.status = "inconclusive"
            rep.add("hits all target cycles", False, f"budget: {exc}")
            return rep
        rep.add("hits all target cycles", not left,
                f"missed cycle {list(left[0].vertices)}" if left else "")
        if left:
            rep.counterexample = left[0]
    else:
        rep.add("certificate kind", False, repr(type(cert)))
    if not all(ok for _, ok, _ in rep.checks):
        rep.status = "fail"
    return rep
