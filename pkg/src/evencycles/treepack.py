"""Packings read off the reduced tree: claws (three leaves around a centre),
a high-degree node, and a long path.  Every theta graph is built from
z-paths that run through A inside one branch of the block tree."""
from __future__ import annotations

from typing import Dict, Hashable, List, Optional, Sequence, Set, Tuple

from .certificates import Packing
from .cycles import ABCPath, abc_path
from .graph import Cycle, bfs_path
from .pipeline import ConstructionError, PipelineState, steiner3, theta_cycle, tree_path
from .trees import LongPath, MaxDegree, ThreeLeafPack, Tree, check_witness, subtrees_meeting_Z

Node = Tuple[str, int]


def _extend_to_leaf(bt, path: List[Node]) -> List[Node]:
    path = list(path)
    while True:
        nxt = [y for y in bt.adj[path[-1]] if len(path) < 2 or y != path[-2]]
        if not nxt:
            return path
        path.append(nxt[0])


def _leg_vertices(state: PipelineState, leg: List[Node]) -> Set[int]:
    """Vertices of the leg's blocks beyond its first node, plus the node
    where the leg leaves that first node."""
    bt = state.bt
    out: Set[int] = set()
    for x in leg[1:]:
        out |= bt.node_vertices(x)
    if leg[0][0] == "c":
        out.add(leg[0][1])
    return out


def z_path_through_A(state: PipelineState, leg: List[Node]) -> List[int]:
    """A path from the leg's start vertex to z inside the leg, through A."""
    G, A, z = state.G, state.A, state.z
    start = leg[0][1] if leg[0][0] == "c" else leg[1][1]
    U = _leg_vertices(state, leg) | {z}
    H, old = G.induced(U)
    new = {v: i for i, v in enumerate(old)}
    for a in sorted(U & A):
        if a == z:
            continue
        if a == start:
            p = bfs_path(H.adj, new[start], {new[z]})
            if p is not None:
                return [old[v] for v in p]
            continue
        r = abc_path(H, new[start], new[a], new[z])
        if isinstance(r, ABCPath):
            return [old[v] for v in r.path]
    raise ConstructionError(f"no z-path through A along leg {leg}")


def _theta_at(state: PipelineState, X: Node, Qs: List[List[int]], tree_adj=None) -> Cycle:
    """Theta from three X-z paths: branch at the cutvertex X, or at the
    centre of a tree joining their starts inside the block X."""
    A = state.A
    if X[0] == "c":
        return theta_cycle(Qs, A)
    starts = [Q[0] for Q in Qs]
    if tree_adj is None:
        m, legs = steiner3(state.G.adj, state.bt.blocks[X[1]], starts)
    else:
        p01 = tree_path(tree_adj, starts[0], starts[1])
        q = tree_path(tree_adj, starts[2], starts[0])
        m = next(v for v in q if v in set(p01))
        i = p01.index(m)
        legs = [p01[i::-1], p01[i:], q[:q.index(m) + 1][::-1]]
    paths = [leg + Q[1:] for leg, Q in zip(legs, Qs)]
    return theta_cycle(paths, A)


def _median(bt, a: Node, b: Node, c: Node) -> Node:
    common = set(bt.path(a, b)) & set(bt.path(a, c)) & set(bt.path(b, c))
    (m,) = common
    return m


def claw_cycle(state: PipelineState, leaves: Sequence[Node]) -> Cycle:
    """Even A-cycle from three leaves of the reduced tree."""
    bt = state.bt
    X = _median(bt, *leaves)
    Qs = [z_path_through_A(state, _extend_to_leaf(bt, bt.path(X, L))) for L in leaves]
    return _theta_at(state, X, Qs)


def _leaf_beyond(T: Tree, start: Node, avoid: Set[Node]) -> Node:
    prev, x = None, start
    while True:
        nxt = [y for y in T.adj[x] if y != prev and y not in avoid]
        if not nxt:
            return x
        prev, x = x, nxt[0]


def _from_claws(state, triples) -> Packing:
    return Packing(state.k, tuple(claw_cycle(state, t) for t in triples), "tree-claws")


def _from_star(state: PipelineState, X: Node) -> Packing:
    G, k, bt = state.G, state.k, state.bt
    T = state.reduced_tree
    leaves = [_leaf_beyond(T, y, {X}) for y in T.adj[X]][:3 * k]
    if len(leaves) < 3 * k:
        raise ConstructionError("star centre has too small degree")
    Qs = [z_path_through_A(state, _extend_to_leaf(bt, bt.path(X, L))) for L in leaves]
    if X[0] == "c":
        groups = [Qs[3 * i: 3 * i + 3] for i in range(k)]
        return Packing(k, tuple(_theta_at(state, X, g) for g in groups), "tree-star")
    # spanning tree of the block plus one pendant per path
    B = bt.blocks[X[1]]
    root = min(B)
    edges, seen, queue = [], {root}, [root]
    while queue:
        u = queue.pop(0)
        for w in G.adj[u]:
            if w in B and w not in seen:
                seen.add(w)
                edges.append((u, w))
                queue.append(w)
    pend = {G.n + i: Q for i, Q in enumerate(Qs)}
    edges += [(p, Q[0]) for p, Q in pend.items()]
    Tx = Tree.from_edges(edges)
    subs = subtrees_meeting_Z(Tx, pend, 3)
    if len(subs) < k:
        raise ConstructionError(f"only {len(subs)} subtrees collect three path ends")
    cycles = []
    for st in subs[:k]:
        ps = sorted(set(pend) & st.vertices)[:3]
        adj: Dict[int, list] = {}
        for u, v in st.edges:
            if u in pend or v in pend:
                continue
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        for p in ps:
            adj.setdefault(pend[p][0], [])
        cycles.append(_theta_at(state, X, [pend[p] for p in ps], tree_adj=adj))
    return Packing(k, tuple(cycles), "tree-star")


def _realize(bt, tpath: Sequence[Node]) -> List[Node]:
    out = [tpath[0]]
    for a, b in zip(tpath, tpath[1:]):
        out += bt.path(a, b)[1:]
    return out


def _from_long_path(state: PipelineState, tpath: Sequence[Node]) -> Packing:
    G, A, k, z, bt = state.G, state.A, state.k, state.z, state.bt
    T = state.reduced_tree
    on = set(tpath)
    branchy = [x for x in tpath if T.degree(x) >= 3]
    if len(branchy) >= 3 * k:
        triples = []
        for g in range(k):
            grp = branchy[3 * g: 3 * g + 3]
            triples.append([_leaf_beyond(T, next(y for y in T.adj[x] if y not in on), {x}) for x in grp])
        return Packing(k, tuple(claw_cycle(state, t) for t in triples), "tree-long-path")

    full = _realize(bt, tpath)
    apos = [i for i, x in enumerate(full) if x in state.keep]
    if len(apos) < 12 * k:
        raise ConstructionError("long path holds fewer than 12k kept A-blocks")
    groups = [apos[4 * s: 4 * s + 4] for s in range(3 * k)]
    fullset = set(full)
    cycles = []
    for t in range(k):
        g3 = groups[3 * t: 3 * t + 3]
        lo = g3[0][0] - 1 if g3[0][0] > 0 else 0
        hi = g3[2][3] + 1 if g3[2][3] + 1 < len(full) else len(full) - 1
        seq = full[lo: hi + 1]
        P = _path_through_blocks(state, seq)
        pidx = {v: i for i, v in enumerate(P)}
        xs, Qs = [], []
        for grp in g3:
            rng = full[grp[1]: grp[2] + 1]
            region: Set[int] = set()
            targets: Set[int] = set()
            for x in rng:
                region |= bt.node_vertices(x)
                for y in bt.adj[x]:
                    if y not in fullset:
                        region |= _branch_vertices(bt, y, x)
            targets = region & set(P)
            allowed = (region - (set(P) - targets)) | {z}
            Q = bfs_path(G.adj, z, targets, allowed=allowed)
            if Q is None:
                raise ConstructionError("no exit towards z between the middle A-blocks")
            xs.append(Q[-1])
            Qs.append(Q)
        i1, i2, i3 = (pidx[x] for x in xs)
        p1 = P[i2:i1 - 1 if i1 > 0 else None:-1] + Qs[0][::-1][1:]
        p2 = Qs[1][::-1]
        p3 = P[i2:i3 + 1] + Qs[2][::-1][1:]
        cycles.append(theta_cycle([p1, p2, p3], A))
    return Packing(k, tuple(cycles), "tree-long-path")


def _branch_vertices(bt, start: Node, parent: Node) -> Set[int]:
    out: Set[int] = set()
    stack = [(start, parent)]
    while stack:
        x, p = stack.pop()
        out |= bt.node_vertices(x)
        stack.extend((y, x) for y in bt.adj[x] if y != p)
    return out


def _path_through_blocks(state: PipelineState, seq: Sequence[Node]) -> List[int]:
    """A path along consecutive block-tree nodes that visits an A-vertex in
    every kept block it crosses."""
    G, A, bt = state.G, state.A, state.bt
    out: List[int] = []
    for i, x in enumerate(seq):
        if x[0] == "c":
            continue
        B = bt.blocks[x[1]]
        av = sorted(B & A)
        entry = seq[i - 1][1] if i > 0 else (av[0] if av else min(B))
        exit_ = seq[i + 1][1] if i + 1 < len(seq) else (av[-1] if av else max(B))
        want = x in state.keep and not ({entry, exit_} & A)
        H, old = G.induced(B)
        new = {v: j for j, v in enumerate(old)}
        seg = None
        if entry == exit_:
            seg = [entry]
        elif want:
            for a in av:
                r = abc_path(H, new[entry], new[a], new[exit_])
                if isinstance(r, ABCPath):
                    seg = [old[v] for v in r.path]
                    break
        else:
            p = bfs_path(H.adj, new[entry], {new[exit_]})
            seg = [old[v] for v in p] if p else None
        if seg is None:
            raise ConstructionError(f"cannot route through block {x}")
        out += seg if not out else seg[1:]
    return out


def packing_from_tree_witness(state: PipelineState, w) -> Packing:
    T = state.reduced_tree
    k = state.k
    reason = check_witness(T, w, 3 * k, k, 15 * k)
    if reason is not None:
        raise ValueError(f"witness does not hold in the reduced tree: {reason}")
    if isinstance(w, MaxDegree):
        return _from_star(state, w.vertex)
    if isinstance(w, ThreeLeafPack):
        leaves = set(T.leaves)
        triples = [sorted(st.vertices & leaves)[:3] for st in w.subtrees[:k]]
        return _from_claws(state, triples)
    if isinstance(w, LongPath):
        return _from_long_path(state, list(w.path))
    raise ValueError(f"unknown witness {w!r}")
