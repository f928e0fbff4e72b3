"""Regenerate the frozen wall and gadget files under tests/golden/.

The tests rebuild the same objects and compare byte for byte, so any change
to the wall encoding shows up as a diff here first.
"""
import argparse
import json
from pathlib import Path

from evencycles.gadgets import GadgetSpec, elementary_wall, long_gadget
from evencycles.graph import serialize_graph

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def golden_files():
    W, ws = elementary_wall(6, 6)
    yield "wall_6x6.graph", serialize_graph(W)
    yield "wall_6x6.json", json.dumps({"rows": 6, "cols": 6, "coords": [list(c) for c in ws.coords]},
                                      sort_keys=True) + "\n"
    G, info = long_gadget(GadgetSpec(wall_size=4))
    yield "long_gadget_4x4.graph", serialize_graph(G)
    yield "long_gadget_4x4.json", json.dumps(info.to_json(), sort_keys=True) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=GOLDEN)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, text in golden_files():
        (args.out / name).write_text(text)
        print(f"wrote {args.out / name}")


if __name__ == "__main__":
    main()
