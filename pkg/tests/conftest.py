import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from oriconvex.graphs import Graph
from oriconvex.invariants import orientable_numbers
from oriconvex.smallgraphs import connected_graphs

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


@pytest.fixture(scope="session")
def connected_upto_6():
    """All connected graphs per order, 3 <= n <= 6."""
    return {n: connected_graphs(n) for n in (3, 4, 5, 6)}


@pytest.fixture(scope="session")
def swept_numbers(connected_upto_6):
    """One exhaustive orientation sweep shared by the theorem criteria.

    Returns ({(n, index): OrientableNumbers}, elapsed_seconds).
    """
    t0 = time.perf_counter()
    table = {}
    for n, graphs in connected_upto_6.items():
        for i, g in enumerate(graphs):
            table[(n, i)] = orientable_numbers(g)
    return table, time.perf_counter() - t0
