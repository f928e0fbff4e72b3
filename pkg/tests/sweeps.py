"""Exhaustive sweeps shared by the acceptance tests and scripts/."""
import random

import networkx as nx

from conftest import DATA
from evencycles.certificates import HittingSet, Packing
from evencycles.cycles import EVEN_A, enumerate_cycles
from evencycles.engine import solve_general
from evencycles.graph import LabeledGraph
from evencycles.oracles import edge_hitting_of_cycles, packing_of_cycles, verify_certificate


def connected_graphs(max_n=8):
    """All connected graphs up to isomorphism, as networkx graphs."""
    for line in (DATA / "connected_graphs.g6").read_text().split():
        g = nx.from_graph6_bytes(line.encode())
        if g.number_of_nodes() <= max_n:
            yield g


def with_random_A(g, rng, p=0.4):
    n = g.number_of_nodes()
    A = [v for v in range(n) if rng.random() < p]
    return LabeledGraph.from_edges(n, g.edges(), A)


def duality_check(G):
    """Weak duality plus agreement of solve_general with the oracle
    dichotomy at k = packing and k = packing + 1.  Returns an error string
    or None."""
    targets = enumerate_cycles(G, EVEN_A)
    p, _ = packing_of_cycles(G, targets)
    h = len(edge_hitting_of_cycles(G, targets))
    if p > h:
        return f"packing {p} > hitting {h}"
    for k in (p, p + 1):
        if k < 1:
            continue
        cert = solve_general(G, k)
        want = Packing if k <= p else HittingSet
        if not isinstance(cert, want):
            return f"k={k}: expected {want.__name__}, got {type(cert).__name__}"
        rep = verify_certificate(G, k, cert)
        if not rep.passed:
            return f"k={k}: certificate fails {rep.checks}"
    return None


def duality_sweep(max_n=8, seed=0):
    rng = random.Random(seed)
    count, failures = 0, []
    for g in connected_graphs(max_n):
        G = with_random_A(g, rng)
        err = duality_check(G)
        count += 1
        if err:
            failures.append((G, err))
    return count, failures
