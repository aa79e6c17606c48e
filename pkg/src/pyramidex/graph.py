"""Immutable simple undirected graphs backed by integer bitset rows.

Row ``rows[v]`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge.
Every algorithm in the package works on these rows directly, so set
operations on neighbourhoods (intersection, union, popcount) are single
big-integer operations.
"""
from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import GraphError

MAX_VERTICES = 8192
INFINITE = math.inf

VertexSet = frozenset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; equality is equality of labelled
    graphs (same ``n`` and same edge set).
    """

    __slots__ = ("n", "rows", "edge_count", "_nbrs")

    def __init__(self, n: int, rows: Sequence[int]):
        # Trusted constructor: rows must already be symmetric and loop-free.
        self.n = n
        self.rows = tuple(rows)
        self.edge_count = sum(r.bit_count() for r in self.rows) // 2
        self._nbrs = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not isinstance(n, int) or n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count must be in [0, {MAX_VERTICES}], got {n!r}")
        rows = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __len__(self) -> int:
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._nbrs is None:
            self._nbrs = tuple(tuple(iter_bits(r)) for r in self.rows)
        return self._nbrs[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        for u, r in enumerate(self.rows):
            yield from ((u, v) for v in iter_bits(r >> (u + 1) << (u + 1)))

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges()) + list(edges))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            rows[perm[v]] = mask_of(perm[u] for u in iter_bits(r))
        return Graph(self.n, rows)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with the given (possibly repeated) edges."""
    return Graph.from_edges(n, edges)


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``, relabelled to ``0..|s|-1`` in increasing order.

    Returns the graph and the remap ``old[i]`` giving the original vertex of
    new vertex ``i``.
    """
    old = tuple(sorted(set(s)))
    for v in old:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside [0, {g.n})")
    rows = []
    for v in old:
        r = g.rows[v]
        rows.append(mask_of(i for i, u in enumerate(old) if r >> u & 1))
    return Graph(len(old), rows), old


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-colouring as a 0/1 list, or None if ``g`` is not bipartite."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, or ``INFINITE`` for a forest.

    BFS from every vertex; each search stops at the depth beyond which it
    could no longer improve the best cycle found so far.
    """
    best = INFINITE
    nbrs = [g.neighbors(v) for v in range(g.n)]
    for s in range(g.n):
        if not nbrs[s]:
            continue
        dist = {s: 0}
        parent = {s: -1}
        layer = [s]
        d = 0
        while layer:
            # Cycles found from layer d have length >= 2d+1.
            if 2 * d + 1 >= best:
                break
            nxt = []
            for v in layer:
                pv = parent[v]
                for u in nbrs[v]:
                    if u == pv:
                        continue
                    du = dist.get(u)
                    if du is None:
                        dist[u] = d + 1
                        parent[u] = v
                        nxt.append(u)
                    else:
                        # du is d (odd cycle) or d+1 (even cycle)
                        length = du + d + 1
                        if length < best:
                            best = length
            layer = nxt
            d += 1
        if best == 3:
            break
    return best
