"""Resource caps for exhaustive searches."""
from __future__ import annotations

import dataclasses
import json
import os
import time


class BudgetError(RuntimeError):
    """A search exceeded its budget; no answer is given."""


@dataclasses.dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 64
    max_cycles: int = 2_000_000
    max_nodes_expanded: int = 200_000_000
    time_cap: float = 600.0

    def __post_init__(self):
        for f in dataclasses.fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"budget field {f.name} must be positive")

    @classmethod
    def from_env(cls, var: str = "EVENCYC_BUDGET") -> "OracleBudget":
        raw = os.environ.get(var)
        if not raw:
            return cls()
        return cls(**json.loads(raw))

    def check_graph(self, n: int):
        if n > self.max_vertices:
            raise BudgetError(f"{n} vertices exceeds desk-scale limit {self.max_vertices}")

    def clock(self) -> "Clock":
        return Clock(self)


class Clock:
    """Counts expanded search nodes and enforces the time cap."""

    def __init__(self, budget: OracleBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self, n: int = 1):
        self.nodes += n
        if self.nodes > self.budget.max_nodes_expanded:
            raise BudgetError(f"expanded more than {self.budget.max_nodes_expanded} search nodes")
        if self.nodes & 0xFFF == 0 and time.monotonic() - self.start > self.budget.time_cap:
            raise BudgetError(f"time cap of {self.budget.time_cap}s exceeded")
