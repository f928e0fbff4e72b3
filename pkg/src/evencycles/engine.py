"""Packing-or-covering driver for even A-cycles.

``solve_single_z`` handles graphs in which one vertex z meets every even
A-cycle and returns either k edge-disjoint even A-cycles or an edge set of
size at most 1080 k^5 meeting all of them.  ``solve_general`` is a
desk-scale driver that leans on the exact oracles.
"""
from __future__ import annotations

import dataclasses
import logging
from typing import Dict, List, Optional, Tuple, Union

from .blocks import ViolationWitness, block_hitting_set, check_block_degree
from .budget import BudgetError, OracleBudget
from .certificates import HittingSet, Packing, hitting_set
from .cycles import EVEN_A, PreconditionError, enumerate_cycles, has_cycle
from .graph import Cycle, Edge, LabeledGraph, biconnected_blocks, norm_edge, subdivide_edge
from .oracles import (edge_hitting_of_cycles, max_edge_disjoint_packing, packing_of_cycles,
                      verify_certificate, vertex_hitting_of_cycles)
from .pipeline import ConstructionError, PipelineState, SingleZViolation, tree_path
from .strings import string_hitting_set
from .treepack import packing_from_tree_witness
from .trees import Tree, subtrees_meeting_Z, tree_trichotomy

log = logging.getLogger(__name__)

Certificate = Union[Packing, HittingSet]


def bound_total(k: int) -> int:
    return 1080 * k ** 5


@dataclasses.dataclass(frozen=True)
class LedgerEntry:
    part: str       # "z-incident" | "block" | "string" | "total"
    ident: str
    size: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.size <= self.bound


@dataclasses.dataclass
class SolveReport:
    certificate: Certificate
    ledger: List[LedgerEntry] = dataclasses.field(default_factory=list)
    notes: List[str] = dataclasses.field(default_factory=list)

    @property
    def within_bounds(self) -> bool:
        return all(e.ok for e in self.ledger)

    def summary(self) -> str:
        c = self.certificate
        head = (f"packing of {len(c.cycles)} cycles ({c.source})" if isinstance(c, Packing)
                else f"hitting set of {len(c.edges)} edges")
        lines = [head]
        lines += [f"  {e.part} {e.ident}: {e.size} <= {e.bound} {'ok' if e.ok else 'EXCEEDED'}"
                  for e in self.ledger]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


# ------------------------------------------------------------------ z in A

def handle_z_in_A(G: LabeledGraph, k: int, z: Optional[int] = None) -> Certificate:
    """For 2-connected ``G`` with z in A: k even cycles through z when z has
    degree >= 4k, otherwise the edges at z."""
    z = G.z if z is None else z
    if z not in G.A:
        raise PreconditionError("z is not in A")
    nbrs = G.adj[z]
    if len(nbrs) < 4 * k:
        return hitting_set(k, {norm_edge(z, w): "z-incident" for w in nbrs}, 4 * k)
    # subdivide every edge at z once; s_of[w] is the new vertex on zw
    H = G
    s_of = {}
    for w in nbrs:
        H, path = subdivide_edge(H, norm_edge(z, w), 2)
        s_of[w] = path[1]
    w_of = {s: w for w, s in s_of.items()}
    # BFS spanning tree of H - z
    root = min(v for v in range(H.n) if v != z)
    depth = {root: 0}
    edges = []
    queue = [root]
    while queue:
        u = queue.pop(0)
        for x in H.adj[u]:
            if x != z and x not in depth:
                depth[x] = depth[u] + 1
                edges.append((u, x))
                queue.append(x)
    if len(depth) != H.n - 1:
        raise PreconditionError("G - z is disconnected; run per block")
    T = Tree.from_edges(edges, vertices=depth)
    classes = [sorted(s for s in w_of if depth[s] % 2 == p) for p in (0, 1)]
    Z = max(classes, key=len)[:2 * k]
    subs = subtrees_meeting_Z(T, Z, 2)[:k]
    cycles = []
    for st in subs:
        s1, s2 = sorted(set(Z) & st.vertices)[:2]
        adj: Dict[int, list] = {}
        for u, v in st.edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        p = tree_path(adj, s1, s2)
        cycles.append(Cycle.canonical([z] + p[1:-1]))
    if len(cycles) < k:
        raise ConstructionError("subtree greedy returned too few paths",
                                frozenset(norm_edge(z, w) for w in nbrs))
    return Packing(k, tuple(cycles), "z-in-A")


# --------------------------------------------------------------- single z

def _validated(G, k, cert: Packing) -> bool:
    return verify_certificate(G, k, cert).passed


def _fallback_packing(G: LabeledGraph, k: int, note: List[str], why: str) -> Optional[Packing]:
    note.append(f"construction failed ({why}); consulted exact packing oracle")
    try:
        cnt, cyc = max_edge_disjoint_packing(G, k_target=k)
    except BudgetError as exc:
        note.append(f"oracle over budget: {exc}")
        return None
    if cnt >= k:
        return Packing(k, tuple(cyc), "oracle-fallback")
    return None


def _solve_block(Gb: LabeledGraph, z: int, k: int, ledger, notes,
                 names=None) -> Union[Packing, Dict[Edge, str]]:
    """Pipeline on one 2-connected graph containing z.  Returns a packing or
    a tagged edge set."""
    A = Gb.A
    names = names or list(range(Gb.n))
    if z in A:
        try:
            cert = handle_z_in_A(Gb, k, z)
        except ConstructionError as exc:
            p = _fallback_packing(Gb, k, notes, str(exc))
            if p is not None:
                return p
            cert = hitting_set(k, {e: "z-incident" for e in exc.fallback})
        if isinstance(cert, Packing):
            if _validated(Gb, k, cert):
                return cert
            p = _fallback_packing(Gb, k, notes, "z-in-A packing failed validation")
            if p is not None:
                return p
            cert = hitting_set(k, {norm_edge(z, w): "z-incident" for w in Gb.adj[z]})
        ledger.append(LedgerEntry("z-incident", f"z={names[z]}", len(cert.edges), 4 * k))
        return dict(zip(cert.edges, cert.provenance))

    state = PipelineState(Gb, z, k)
    bt = state.bt
    w = check_block_degree(Gb, state=state)
    if isinstance(w, ViolationWitness):
        raise SingleZViolation(f"A-vertex {w.vertex} has three neighbours in a block of G - z",
                               w.cycle)
    for node, nbrs in bt.adj.items():
        if len(nbrs) <= 1 and node[0] == "B" and len(bt.blocks) > 1:
            if not bt.blocks[node[1]] & state.znbrs:
                raise SingleZViolation(f"leaf block {sorted(bt.blocks[node[1]])} has no neighbour of z")

    tagged: Dict[Edge, str] = {}

    def attempt(fn, *args):
        try:
            return fn(*args)
        except ConstructionError as exc:
            p = _fallback_packing(Gb, k, notes, str(exc))
            return p if p is not None else exc.fallback

    parts = [("string", S) for S in state.strings] + [("block", b) for b in state.A_Sbar]
    for kind, Y in parts:
        if kind == "string":
            r = attempt(string_hitting_set, state, Y)
            ident = f"{names[Y.cutvertices[0]]}..{names[Y.cutvertices[-1]]}"
            bound, tag = 24 * k * k, "string:F_S"
        else:
            r = attempt(block_hitting_set, state, Y)
            ident = str(sorted(names[v] for v in bt.blocks[Y]))
            bound, tag = 12 * k, "block:F_B"
        if isinstance(r, Packing):
            if _validated(Gb, k, r):
                return r
            p = _fallback_packing(Gb, k, notes, f"{r.source} packing failed validation")
            if p is not None:
                return p
            raise ConstructionError("packing construction failed and oracle found none")
        ledger.append(LedgerEntry(kind, ident, len(r), bound))
        for e in sorted(r):
            tagged.setdefault(e, tag)

    threshold = 45 * k ** 3
    notes.append(f"{len(state.keep)} kept A-blocks against the 45k^3 = {threshold} threshold: "
                 + ("tree branch" if len(state.keep) >= threshold else "union of part sets"))
    if len(state.keep) >= threshold:
        wit = tree_trichotomy(state.reduced_tree, 3 * k, k, 15 * k)
        r = attempt(packing_from_tree_witness, state, wit)
        if isinstance(r, Packing) and _validated(Gb, k, r):
            return r
        notes.append("reduced-tree packing unavailable; returning the union of part sets")
    return tagged


def solve_single_z_report(G: LabeledGraph, k: int, z: Optional[int] = None, trusted: bool = False,
                          budget: Optional[OracleBudget] = None, probe: bool = True) -> SolveReport:
    """Run the pipeline.  With ``probe`` a desk-scale exact packing search
    runs after the pipeline produced an edge set, and upgrades the answer to
    a packing when one exists (e.g. cycles spread over several blocks at z)."""
    z = G.z if z is None else z
    if z is None:
        raise PreconditionError("no vertex z given")
    if k < 1:
        raise PreconditionError("k must be positive")
    G = G.with_labels(z=z)
    notes: List[str] = []
    if not trusted:
        bad = enumerate_cycles(G.remove_edges([norm_edge(z, w) for w in G.adj[z]]), EVEN_A,
                               cap=1, budget=budget)
        if bad:
            raise SingleZViolation("even A-cycle avoiding z", bad[0])
    if k == 1:
        found = enumerate_cycles(G, EVEN_A, cap=1, budget=budget)
        if found:
            return SolveReport(Packing(1, (found[0],), "oracle"), notes=["k = 1 answered by search"])
        return SolveReport(hitting_set(1, {}, bound_total(1)), notes=["k = 1 answered by search"])

    ledger: List[LedgerEntry] = []
    tagged: Dict[Edge, str] = {}
    for verts, edges in biconnected_blocks(G):
        if z not in verts or len(verts) < 3:
            continue
        Gb, old = G.induced(verts)
        zb = old.index(z)
        r = _solve_block(Gb, zb, k, ledger, notes, old)
        if isinstance(r, Packing):
            cycles = tuple(Cycle.canonical([old[v] for v in c.vertices]) for c in r.cycles)
            return SolveReport(Packing(k, cycles, r.source), ledger, notes)
        for (u, v), tag in r.items():
            tagged.setdefault(norm_edge(old[u], old[v]), tag)
    cert = hitting_set(k, tagged, bound_total(k))
    ledger.append(LedgerEntry("total", "F", len(cert.edges), bound_total(k)))
    if probe and G.n <= (budget or OracleBudget()).max_vertices:
        try:
            cnt, cyc = max_edge_disjoint_packing(G, k_target=k, budget=budget)
        except BudgetError as exc:
            notes.append(f"packing probe skipped: {exc}")
        else:
            if cnt >= k:
                notes.append(f"pipeline set had {len(cert.edges)} edges; probe found a packing")
                return SolveReport(Packing(k, tuple(cyc), "oracle-probe"), ledger, notes)
    return SolveReport(cert, ledger, notes)


def solve_single_z(G: LabeledGraph, k: int, z: Optional[int] = None, trusted: bool = False,
                   budget: Optional[OracleBudget] = None, probe: bool = True) -> Certificate:
    return solve_single_z_report(G, k, z, trusted, budget, probe).certificate


# ------------------------------------------------------------------ general

def solve_general_report(G: LabeledGraph, k: int, budget: Optional[OracleBudget] = None) -> SolveReport:
    if k < 1:
        raise PreconditionError("k must be positive")
    budget = budget or OracleBudget()
    budget.check_graph(G.n)
    targets = enumerate_cycles(G, EVEN_A, budget=budget)
    cnt, cycles = packing_of_cycles(G, targets, k, budget)
    if cnt >= k:
        return SolveReport(Packing(k, tuple(cycles), "oracle"))
    X = vertex_hitting_of_cycles(G, targets, budget)
    notes = [f"minimum vertex hitting set has {len(X)} vertices; "
             f"bound 1080k^5*|X| = {bound_total(k) * max(len(X), 1)}"]
    if not X:
        return SolveReport(hitting_set(k, {}, 0), notes=notes)
    if len(X) == 1 and k >= 2:
        rep = solve_single_z_report(G, k, X[0], trusted=True, budget=budget)
        rep.notes = notes + rep.notes
        cert = rep.certificate
        if isinstance(cert, HittingSet):
            pruned = prune_hitting_set(G, cert, budget)
            if len(pruned.edges) < len(cert.edges):
                rep.notes.append(f"pruned {len(cert.edges) - len(pruned.edges)} redundant edges")
                rep.certificate = pruned
        return rep
    F = edge_hitting_of_cycles(G, targets, budget)
    return SolveReport(hitting_set(k, {e: "oracle" for e in F}, None), notes=notes)


def prune_hitting_set(G: LabeledGraph, cert: HittingSet,
                      budget: Optional[OracleBudget] = None) -> HittingSet:
    """Drop edges (in sorted order) whose removal leaves F a hitting set."""
    keep = dict(zip(cert.edges, cert.provenance))
    for e in list(cert.edges):
        rest = [f for f in keep if f != e]
        if has_cycle(G.remove_edges(rest), EVEN_A, budget=budget) is None:
            del keep[e]
    return hitting_set(cert.k, keep, cert.bound_claimed)


def solve_general(G: LabeledGraph, k: int, budget: Optional[OracleBudget] = None) -> Certificate:
    return solve_general_report(G, k, budget).certificate
