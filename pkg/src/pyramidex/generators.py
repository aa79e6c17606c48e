"""Named graph families: pyramids, the gadget F, Turán graphs, high-girth graphs."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import ConstructionInvalid
from .graph import INFINITE, MAX_VERTICES, Graph, girth, iter_bits


@dataclass(frozen=True)
class PyramidLayout:
    """TP_k together with the layer/position of every vertex (both 1-based)."""

    k: int
    graph: Graph
    layer_of: tuple[int, ...]
    pos_of: tuple[int, ...]

    def vertex(self, layer: int, pos: int) -> int:
        return pyramid_vertex(layer, pos)

    def to_json(self) -> dict:
        return {str(v): [self.layer_of[v], self.pos_of[v]] for v in range(self.graph.n)}


def pyramid_vertex(layer: int, pos: int) -> int:
    """Index of y_pos^layer under layer-major, position-minor numbering."""
    return layer * (layer - 1) // 2 + pos - 1


def triangular_pyramid(k: int) -> PyramidLayout:
    if not isinstance(k, int) or not 1 <= k <= 50:
        raise ValueError(f"layer count k must satisfy 1 <= k <= 50, got {k!r}")
    edges = []
    layer_of = []
    pos_of = []
    for i in range(1, k + 2):
        for t in range(1, i + 1):
            layer_of.append(i)
            pos_of.append(t)
        for t in range(1, i):
            edges.append((pyramid_vertex(i, t), pyramid_vertex(i, t + 1)))
    for i in range(1, k + 1):
        for t in range(1, i + 1):
            edges.append((pyramid_vertex(i, t), pyramid_vertex(i + 1, t)))
            edges.append((pyramid_vertex(i, t), pyramid_vertex(i + 1, t + 1)))
    n = (k + 1) * (k + 2) // 2
    return PyramidLayout(k, Graph.from_edges(n, edges), tuple(layer_of), tuple(pos_of))


def graph_f() -> Graph:
    """Ten-vertex path x_1..x_10 with the chord x_3x_8 (x_i is vertex i-1)."""
    edges = [(i, i + 1) for i in range(9)] + [(2, 7)]
    return Graph.from_edges(10, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for v in range(n) for u in range(v)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (P_n)."""
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def turan_graph(n: int, k: int) -> Graph:
    """Balanced complete k-partite graph T_k(n)."""
    if n < 1 or k < 1:
        raise ValueError("turan_graph needs n >= 1 and k >= 1")
    if k > n:
        raise ValueError(f"turan_graph needs k <= n (got n={n}, k={k})")
    part = [v % k for v in range(n)]
    full = (1 << n) - 1
    same = [0] * k
    for v in range(n):
        same[part[v]] |= 1 << v
    return Graph(n, [full & ~same[part[v]] for v in range(n)])


def complete_bipartite(a: int, b: int) -> tuple[Graph, frozenset, frozenset]:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    if a + b > MAX_VERTICES:
        raise ValueError(f"K_{{{a},{b}}} exceeds {MAX_VERTICES} vertices")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    rows = [right] * a + [left] * b
    return Graph(a + b, rows), frozenset(range(a)), frozenset(range(a, a + b))


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def algebraic_bipartite(q: int) -> tuple[Graph, frozenset, frozenset]:
    """The unverified point/line incidence graph over triples mod ``q``.

    Point ``(p1, p2, p3)`` is joined to line ``(l1, l2, l3)`` iff
    ``l2 = l1*p1 + p2`` and ``l3 = l1*p2 + p3`` (mod q).  Points occupy
    ``0..q^3-1`` and lines ``q^3..2q^3-1``, each in lexicographic order.
    """
    m = q ** 3
    rows = [0] * (2 * m)
    for pi, (p1, p2, p3) in enumerate(product(range(q), repeat=3)):
        for l1 in range(q):
            l2 = (l1 * p1 + p2) % q
            l3 = (l1 * p2 + p3) % q
            li = m + (l1 * q + l2) * q + l3
            rows[pi] |= 1 << li
            rows[li] |= 1 << pi
    return Graph(2 * m, rows), frozenset(range(m)), frozenset(range(m, 2 * m))


def high_girth_bipartite(q: int) -> tuple[Graph, frozenset, frozenset]:
    """Verified girth->=8 bipartite graph with parts of size q^3 and q^4 edges.

    Raises ConstructionInvalid if the girth check fails.
    """
    if not isinstance(q, int) or not _is_prime(q) or q > 13:
        raise ValueError(f"q must be a prime with 2 <= q <= 13, got {q!r}")
    if 2 * q ** 3 > MAX_VERTICES:
        raise ValueError(f"q={q} gives {2 * q ** 3} vertices, above the {MAX_VERTICES} limit")
    g, points, lines = algebraic_bipartite(q)
    gi = girth(g)
    if gi < 8:
        raise ConstructionInvalid(f"algebraic graph for q={q} has girth {gi} < 8")
    return g, points, lines


def _distance_at_least(rows: list[int], u: int, v: int, bound: int) -> bool:
    """True iff dist(u, v) >= bound in the graph given by ``rows``."""
    seen = 1 << u
    frontier = seen
    target = 1 << v
    for _ in range(bound - 1):
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= rows[x]
        nxt &= ~seen
        if nxt & target:
            return False
        if not nxt:
            return True
        seen |= nxt
        frontier = nxt
    return True


def greedy_high_girth(n: int, gmin: int, seed: int = 0) -> Graph:
    """Random greedy graph of girth at least ``gmin``.

    Non-edges are tried in a seeded random order; an edge ``uv`` is kept iff
    the shortest cycle it closes, ``dist(u, v) + 1``, is at least ``gmin``.
    Passes repeat until one adds nothing.
    """
    if gmin < 4 or n < 1:
        raise ValueError(f"greedy_high_girth needs n >= 1 and gmin >= 4 (got n={n}, gmin={gmin})")
    rng = random.Random(seed)
    pairs = [(u, v) for v in range(n) for u in range(v)]
    rng.shuffle(pairs)
    rows = [0] * n
    added = True
    while added:
        added = False
        for u, v in pairs:
            if rows[u] >> v & 1:
                continue
            if _distance_at_least(rows, u, v, gmin - 1):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                added = True
    g = Graph(n, rows)
    gi = girth(g)
    assert gi == INFINITE or gi >= gmin
    return g


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdős–Rényi G(n, p), seeded."""
    rng = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])
