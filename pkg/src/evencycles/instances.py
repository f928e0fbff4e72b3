"""Deterministic random instances for tests and benchmark scripts."""
from __future__ import annotations

import random
from typing import Iterator, List, Optional, Tuple

from .cycles import EVEN_A, enumerate_cycles
from .graph import LabeledGraph, norm_edge


def random_connected(rng: random.Random, n: int, extra: int) -> List[Tuple[int, int]]:
    """Random spanning tree on 0..n-1 plus up to ``extra`` further edges."""
    edges = {norm_edge(i, rng.randrange(i)) for i in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(pairs)
    edges |= set(pairs[:extra])
    return sorted(edges)


def single_z_instance(rng: random.Random, n: int, extra: int, a_frac: float = 0.4,
                      z_in_A: Optional[bool] = None, tries: int = 200) -> Optional[LabeledGraph]:
    """A connected graph on n vertices with z = n - 1 meeting every even
    A-cycle, and at least one even A-cycle.  G - z is drawn at random and
    rejected while it holds an even A-cycle."""
    for _ in range(tries):
        m = n - 1
        H = random_connected(rng, m, extra)
        A = {v for v in range(m) if rng.random() < a_frac}
        Hg = LabeledGraph.from_edges(m, H, A)
        if enumerate_cycles(Hg, EVEN_A, cap=1):
            continue
        z = m
        deg = rng.randint(2, max(2, min(m, 5)))
        nbrs = rng.sample(range(m), deg)
        zA = rng.random() < 0.3 if z_in_A is None else z_in_A
        G = LabeledGraph.from_edges(n, H + [(z, w) for w in nbrs], A | ({z} if zA else set()), z)
        if enumerate_cycles(G, EVEN_A, cap=1):
            return G
    return None


def flower(petals: List[Tuple[int, List[int]]], z_in_A: bool = False) -> LabeledGraph:
    """Cycles glued at z = 0; each petal is (length, positions of A-vertices
    along the petal, 1-based from z)."""
    edges, A = [], set()
    nxt = 1
    for length, apos in petals:
        ids = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        path = [0] + ids + [0]
        edges += list(zip(path, path[1:]))
        A |= {ids[p - 1] for p in apos}
    if z_in_A:
        A.add(0)
    return LabeledGraph.from_edges(nxt, edges, A, 0)


def single_z_suite(seed: int = 0, count: int = 60) -> Iterator[Tuple[str, LabeledGraph, int]]:
    """Curated single-z instances (at most 14 vertices) with k in {2, 3}."""
    fixed = [
        ("two-c4", flower([(4, [2]), (4, [2])]), 2),
        ("three-c4", flower([(4, [2]), (4, [2]), (4, [1])]), 3),
        ("c4-c6", flower([(4, [2]), (6, [3])]), 3),
        ("c4-c3-c5", flower([(4, [1]), (3, [1]), (5, [2])]), 2),
        ("z-in-A-petals", flower([(4, []), (4, []), (6, [])], z_in_A=True), 2),
        ("single-c6", flower([(6, [1, 4])]), 2),
    ]
    yield from fixed
    rng = random.Random(seed)
    made = 0
    while made < count - len(fixed):
        n = rng.randint(6, 14)
        G = single_z_instance(rng, n, rng.randint(0, n // 2))
        if G is None:
            continue
        made += 1
        yield f"random-{made:02d}", G, 2 + made % 2
