import random
import sys
from itertools import permutations

import pytest

from pyramidex.graph import Graph


def brute_has_embedding(pattern: Graph, host: Graph) -> bool:
    pe = list(pattern.edges())
    for inj in permutations(range(host.n), pattern.n):
        if all(host.has_edge(inj[a], inj[b]) for a, b in pe):
            return True
    return False


def brute_girth(g: Graph):
    """Shortest cycle via 'delete edge uv, shortest u-v path + 1', over all edges."""
    best = float("inf")
    for u, v in g.edges():
        dist = {u: 0}
        frontier = [u]
        while frontier and v not in dist:
            nxt = []
            for x in frontier:
                for y in g.neighbors(x):
                    if (x, y) in ((u, v), (v, u)) or y in dist:
                        continue
                    dist[y] = dist[x] + 1
                    nxt.append(y)
            frontier = nxt
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_line(num))
