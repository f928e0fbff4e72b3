"""Write all connected graphs on 1..8 vertices (up to isomorphism) as graph6.

Graphs on <= 7 vertices come from the networkx atlas.  Every connected graph
has a vertex whose removal keeps it connected, so the 8-vertex graphs are
the one-vertex extensions of the connected 7-vertex graphs, deduplicated by
Weisfeiler-Lehman hash and an exact isomorphism test inside each bucket.
"""
import argparse
import itertools
import time
from pathlib import Path

import networkx as nx


def connected_atlas(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]


def extend(graphs, n):
    buckets = {}
    out = []
    for g in graphs:
        for r in range(1, n):
            for nbrs in itertools.combinations(range(n - 1), r):
                h = g.copy()
                h.add_edges_from((n - 1, v) for v in nbrs)
                key = (tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, o) for o in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", type=Path, default=Path(__file__).parent.parent / "tests/data/connected_graphs.g6")
    args = ap.parse_args()
    t = time.time()
    graphs = []
    for n in range(1, min(args.max_n, 7) + 1):
        graphs += connected_atlas(n)
    if args.max_n >= 8:
        graphs += extend(connected_atlas(7), 8)
    lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs]
    args.out.write_text("\n".join(lines) + "\n")
    counts = {}
    for g in graphs:
        counts[g.number_of_nodes()] = counts.get(g.number_of_nodes(), 0) + 1
    print(f"{len(graphs)} graphs {counts} in {time.time() - t:.1f}s -> {args.out}")


if __name__ == "__main__":
    main()
