import os
import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from evencycles.graph import LabeledGraph  # noqa: E402

settings.register_profile("default", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=True, labelled=True):
    """Small labelled graphs: a random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    if connected:
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            edges.add((j, i))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n))
        edges |= set(extra)
    A = draw(st.sets(st.integers(0, n - 1))) if labelled and n else set()
    return LabeledGraph.from_edges(n, edges, A)


@pytest.fixture
def rng():
    return random.Random(12345)


def cycle_graph(n, A=(), z=None):
    return LabeledGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], A, z)


def two_c4():
    return LabeledGraph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)],
                                   A=[2, 5], z=0)


def k4(A=(0,)):
    return LabeledGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], A)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
