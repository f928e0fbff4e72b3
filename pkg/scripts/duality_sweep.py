"""Weak-duality sweep over all connected graphs up to --max-n vertices.

Each graph gets a random A; the exact packing must not exceed the exact
edge hitting number, and solve_general must return the matching kind of
certificate at k = packing and k = packing + 1.
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from sweeps import duality_sweep  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    t0 = time.perf_counter()
    count, failures = duality_sweep(args.max_n, args.seed)
    for G, err in failures[:10]:
        print(f"FAIL n={G.n} edges={G.sorted_edges} A={sorted(G.A)}: {err}")
    print(f"{count} graphs, {len(failures)} failures, {time.perf_counter() - t0:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
