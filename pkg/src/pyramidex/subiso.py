"""Subgraph containment (non-induced), biclique counts, independent sets."""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import BudgetExceeded, CapabilityError
from .graph import Graph, iter_bits, mask_of

DEFAULT_BUDGET = int(os.environ.get("PYRAMIDEX_BUDGET", 10 ** 8))


@dataclass(frozen=True)
class Embedding:
    """Injective map ``mapping[p] = host vertex`` for each pattern vertex ``p``."""

    pattern: Graph
    host: Graph
    mapping: tuple[int, ...]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.mapping))


class Freeness(enum.Enum):
    YES = "free"
    NO = "contains"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class FreeCheck:
    verdict: Freeness
    witness: Embedding | None = None
    nodes: int = 0


def search_order(pattern: Graph, first: Sequence[int] = ()) -> list[int]:
    """Static matching order: connectivity-respecting, most constrained first.

    Next vertex = most already-ordered neighbours, then highest degree, then
    smallest index.  ``first`` forces a prefix.
    """
    order = list(first)
    placed = mask_of(order)
    deg = pattern.degrees()
    while len(order) < pattern.n:
        best = None
        best_key = None
        for v in range(pattern.n):
            if placed >> v & 1:
                continue
            key = ((pattern.rows[v] & placed).bit_count(), deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


class _Plan:
    """Precomputed matching order for one pattern (optionally with a fixed prefix)."""

    def __init__(self, pattern: Graph, first: Sequence[int] = ()):
        self.pattern = pattern
        self.order = search_order(pattern, first)
        pos = {v: i for i, v in enumerate(self.order)}
        self.back = [
            tuple(u for u in pattern.neighbors(v) if pos[u] < i)
            for i, v in enumerate(self.order)
        ]
        self.pdeg = [pattern.degree(v) for v in self.order]


@lru_cache(maxsize=256)
def _plan(pattern: Graph, first: tuple[int, ...] = ()) -> _Plan:
    return _Plan(pattern, first)


def _degree_masks(host_rows: Sequence[int], degrees: set[int]) -> dict[int, int]:
    hdeg = [r.bit_count() for r in host_rows]
    return {d: mask_of(v for v, x in enumerate(hdeg) if x >= d) for d in degrees}


def _match(plan: _Plan, rows: Sequence[int], n: int, image: list[int], start: int,
           used: int, budget: int, nodes: list[int], deg_masks: dict[int, int] | None) -> bool:
    order, back, pdeg = plan.order, plan.back, plan.pdeg
    m = len(order)
    full = (1 << n) - 1
    # Iterative DFS: stack of remaining candidate masks per depth.
    cands = [0] * m
    k = start

    def candidates(k: int) -> int:
        c = full & ~used
        if deg_masks is not None:
            c &= deg_masks[pdeg[k]]
        for q in back[k]:
            c &= rows[image[q]]
        return c

    if k == m:
        return True
    cands[k] = candidates(k)
    while True:
        c = cands[k]
        if not c:
            k -= 1
            if k < start:
                return False
            used &= ~(1 << image[order[k]])
            continue
        low = c & -c
        cands[k] = c ^ low
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceeded(nodes[0])
        image[order[k]] = low.bit_length() - 1
        used |= low
        k += 1
        if k == m:
            return True
        cands[k] = candidates(k)


def find_embedding(pattern: Graph, host: Graph, budget: int = DEFAULT_BUDGET) -> Embedding | None:
    """Least embedding of ``pattern`` into ``host`` under the static search order.

    Returns None when exhaustive search proves there is none; raises
    BudgetExceeded when ``budget`` node expansions do not suffice.
    """
    if pattern.n < 1:
        raise ValueError("pattern must have at least one vertex")
    return _find(pattern, host, budget)[0]


def _find(pattern: Graph, host: Graph, budget: int) -> tuple[Embedding | None, int]:
    nodes = [0]
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return None, 0
    plan = _plan(pattern)
    deg_masks = _degree_masks(host.rows, set(plan.pdeg))
    image = [-1] * pattern.n
    if _match(plan, host.rows, host.n, image, 0, 0, budget, nodes, deg_masks):
        return Embedding(pattern, host, tuple(image)), nodes[0]
    return None, nodes[0]


def contains_through_edge(pattern: Graph, rows: Sequence[int], n: int, u: int, v: int,
                          budget: int = DEFAULT_BUDGET) -> bool:
    """Does the host given by ``rows`` contain ``pattern`` using the edge ``uv``?

    Only copies whose image includes ``uv`` are searched, which is the
    incremental test needed after adding ``uv`` to a pattern-free host.
    """
    nodes = [0]
    for a, b in pattern.edges():
        for x, y in ((u, v), (v, u)):
            plan = _plan(pattern, (a, b))
            image = [-1] * pattern.n
            image[a], image[b] = x, y
            if _match(plan, rows, n, image, 2, (1 << x) | (1 << y), budget, nodes, None):
                return True
    return False


def is_free(host: Graph, pattern: Graph, budget: int = DEFAULT_BUDGET) -> FreeCheck:
    try:
        emb, nodes = _find(pattern, host, budget)
    except BudgetExceeded as exc:
        return FreeCheck(Freeness.INCONCLUSIVE, None, exc.nodes)
    if emb is None:
        return FreeCheck(Freeness.YES, None, nodes)
    return FreeCheck(Freeness.NO, emb, nodes)


def verify_embedding(e: Embedding) -> tuple[bool, str | None]:
    """Check injectivity and edge preservation; on failure name the first violation."""
    if e.pattern is None or e.host is None:
        raise ValueError("embedding refers to a missing graph")
    pattern, host, mp = e.pattern, e.host, e.mapping
    if len(mp) != pattern.n:
        return False, f"mapping has {len(mp)} entries for a {pattern.n}-vertex pattern"
    seen = {}
    for p, h in enumerate(mp):
        if not 0 <= h < host.n:
            return False, f"pattern vertex {p} maps outside the host ({h})"
        if h in seen:
            return False, f"pattern vertices {seen[h]} and {p} both map to host vertex {h}"
        seen[h] = p
    for a, b in pattern.edges():
        if not host.has_edge(mp[a], mp[b]):
            return False, f"pattern edge ({a}, {b}) maps to non-edge ({mp[a]}, {mp[b]})"
    return True, None


def count_bicliques(host: Graph, r: int) -> int:
    """Number of K_{r,r} subgraphs, i.e. unordered pairs of disjoint r-sets fully joined."""
    if not 1 <= r <= 3:
        raise CapabilityError(f"count_bicliques supports 1 <= r <= 3 (got r={r})")
    rows = host.rows
    total = 0
    if r == 1:
        return host.edge_count
    if r == 2:
        for u, v in combinations(range(host.n), 2):
            total += comb((rows[u] & rows[v]).bit_count(), 2)
        return total // 2
    for u in range(host.n):
        for v in range(u + 1, host.n):
            cuv = rows[u] & rows[v]
            if cuv.bit_count() < 3:
                continue
            for w in range(v + 1, host.n):
                c = (cuv & rows[w]).bit_count()
                if c >= 3:
                    total += comb(c, 3)
    return total // 2


def independent_set_masks(g: Graph) -> list[int]:
    if g.n > 20:
        raise CapabilityError(f"independent set enumeration is limited to n <= 20 (got n={g.n})")
    out = []
    rows = g.rows

    def grow(mask: int, allowed: int) -> None:
        out.append(mask)
        while allowed:
            low = allowed & -allowed
            v = low.bit_length() - 1
            allowed ^= low
            grow(mask | low, allowed & ~rows[v])

    grow(0, (1 << g.n) - 1)
    out.sort()
    return out


def independent_sets(g: Graph) -> list[frozenset]:
    """All independent sets including the empty set, ordered by bitmask value."""
    return [frozenset(iter_bits(m)) for m in independent_set_masks(g)]
