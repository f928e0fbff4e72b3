"""Certificate values and their JSON form."""
from __future__ import annotations

import dataclasses
import json
from typing import Optional, Tuple

from .graph import Cycle, Edge, norm_edge

PROVENANCE_TAGS = ("z-incident", "block:F_B", "string:F_S", "oracle")


@dataclasses.dataclass(frozen=True)
class Packing:
    k: int
    cycles: Tuple[Cycle, ...]
    source: str = ""

    kind = "packing"

    def to_json(self):
        return {"kind": "packing", "k": self.k, "cycles": [c.to_json() for c in self.cycles],
                "source": self.source, "bound_claimed": None}


@dataclasses.dataclass(frozen=True)
class HittingSet:
    k: int
    edges: Tuple[Edge, ...]
    provenance: Tuple[str, ...]
    bound_claimed: Optional[int] = None

    kind = "hitting"

    def __post_init__(self):
        if len(self.edges) != len(self.provenance):
            raise ValueError("one provenance tag per edge")

    def to_json(self):
        return {"kind": "hitting", "k": self.k, "edges": [list(e) for e in self.edges],
                "provenance": list(self.provenance), "bound_claimed": self.bound_claimed}


Certificate = (Packing, HittingSet)


def hitting_set(k, tagged: dict, bound=None) -> HittingSet:
    """Build from ``{edge: tag}``; edges sorted."""
    items = sorted((norm_edge(*e), t) for e, t in tagged.items())
    return HittingSet(k, tuple(e for e, _ in items), tuple(t for _, t in items), bound)


def certificate_from_json(d) -> "Packing | HittingSet":
    kind = d.get("kind")
    if kind == "packing":
        cycles = []
        for c in d["cycles"]:
            # keep the raw order if it is not a valid cycle so verification can reject it
            try:
                cycles.append(Cycle.canonical(c))
            except ValueError:
                cycles.append(Cycle(tuple(c)))
        return Packing(int(d["k"]), tuple(cycles), d.get("source", ""))
    if kind == "hitting":
        edges = tuple(norm_edge(*e) for e in d["edges"])
        prov = tuple(d.get("provenance") or ["oracle"] * len(edges))
        return HittingSet(int(d["k"]), edges, prov, d.get("bound_claimed"))
    raise ValueError(f"unknown certificate kind {kind!r}")


def dumps(cert) -> str:
    return json.dumps(cert.to_json(), sort_keys=True, indent=1) + "\n"
