"""Exact Turán numbers ex(n, H) for small n by orderly generation."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .canon import CANONICAL_LIMIT, canonical_code, is_canonical_rows
from .errors import BudgetExceeded, CapabilityError, ValidationError
from .formats import decode_graph6, encode_graph6
from .generators import complete_graph, turan_graph
from .graph import Graph, is_bipartite, is_connected
from .subiso import contains_through_edge, find_embedding

DEFAULT_EX_BUDGET = 10 ** 9
EXACT = "EXACT"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


def h(n: int) -> int:
    """Edge count of the balanced complete bipartite graph on n vertices."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return n * n // 4


@dataclass
class TuranRecord:
    n: int
    pattern: Graph
    value: int
    witnesses: list[Graph] = field(default_factory=list)
    nodes_explored: int = 0
    status: str = EXACT

    @property
    def pattern_code(self) -> str:
        if self.pattern.n <= CANONICAL_LIMIT:
            return canonical_code(self.pattern).hex()
        return encode_graph6(self.pattern)

    @property
    def witness_codes(self) -> list[bytes]:
        return [canonical_code(w) for w in self.witnesses]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pattern": encode_graph6(self.pattern),
            "pattern_code": self.pattern_code,
            "value": self.value,
            "status": self.status,
            "witnesses": [encode_graph6(w) for w in self.witnesses],
            "nodes_explored": self.nodes_explored,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TuranRecord":
        try:
            witnesses = [decode_graph6(w) for w in data["witnesses"]]
        except ValueError as exc:
            raise ValidationError(f"malformed witness: {exc}") from exc
        return cls(
            n=data["n"],
            pattern=decode_graph6(data["pattern"]),
            value=data["value"],
            witnesses=witnesses,
            nodes_explored=data.get("nodes_explored", 0),
            status=data.get("status", EXACT),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _column_positions(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def exact_ex(n: int, pattern: Graph, budget: int = DEFAULT_EX_BUDGET,
             max_n: int = 10) -> TuranRecord:
    """Exact ex(n, pattern) with all extremal graphs up to isomorphism.

    Graphs are grown one edge at a time, only ever adding an edge after the
    last edge of the current (canonically labelled) graph, and only keeping
    children that are themselves canonical, so every isomorphism class is
    visited once.  A branch is cut when its edges plus the pattern-free
    additions still available to it cannot reach the incumbent.
    """
    if pattern.edge_count == 0:
        raise ValueError("pattern must have at least one edge")
    if not is_connected(pattern):
        raise ValueError("pattern must be connected")
    if pattern.n > n:
        kn = complete_graph(n)
        return TuranRecord(n, pattern, kn.edge_count, [kn], 0, EXACT)
    if max_n > CANONICAL_LIMIT:
        raise CapabilityError(f"exact_ex hard cap is n <= {CANONICAL_LIMIT}")
    if n > max_n:
        raise CapabilityError(f"exact_ex is limited to n <= {max_n} (got n={n})")

    positions = _column_positions(n)
    npos = len(positions)
    if is_bipartite(pattern):
        best = 0
    else:
        best = h(n)
    witnesses: list[list[int]] = []
    nodes = 0
    rows = [0] * n

    def dfs(m: int, last: int) -> None:
        nonlocal best, witnesses, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes, best)
        addable = []
        for p in range(last + 1, npos):
            i, j = positions[p]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            if not contains_through_edge(pattern, rows, n, i, j):
                addable.append(p)
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)
        if m > best:
            best = m
            witnesses = []
        if m == best:
            witnesses.append(list(rows))
        k = len(addable)
        for idx, p in enumerate(addable):
            # descendants of this child can only add later addable positions
            if m + k - idx < best:
                break
            i, j = positions[p]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            if is_canonical_rows(rows, n):
                dfs(m + 1, p)
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)

    try:
        dfs(0, -1)
    except BudgetExceeded:
        fallback = turan_graph(n, 2) if best == h(n) and not is_bipartite(pattern) else None
        found = [Graph(n, w) for w in witnesses] or ([fallback] if fallback else [])
        value = max((g.edge_count for g in found), default=0)
        return TuranRecord(n, pattern, value, found, nodes, BUDGET_EXCEEDED)
    graphs = [Graph(n, w) for w in witnesses]
    return TuranRecord(n, pattern, best, graphs, nodes, EXACT)


def verify_record(r: TuranRecord, budget: int = DEFAULT_EX_BUDGET) -> bool:
    """Re-check every witness: right order, claimed edge count, pattern-free."""
    for idx, w in enumerate(r.witnesses):
        if not isinstance(w, Graph):
            raise ValidationError(f"witness {idx} is not a graph")
        if w.n != r.n or w.edge_count != r.value:
            return False
        if find_embedding(r.pattern, w, budget) is not None:
            return False
    return True


def orderly_graphs(n: int, forbidden: Graph | None = None):
    """Yield one canonically labelled graph per isomorphism class on n vertices.

    With ``forbidden`` set, only classes free of that pattern are produced.
    """
    if n > CANONICAL_LIMIT:
        raise CapabilityError(f"orderly generation is limited to n <= {CANONICAL_LIMIT}")
    positions = _column_positions(n)
    rows = [0] * n

    def walk(last: int):
        yield Graph(n, rows)
        for p in range(last + 1, len(positions)):
            i, j = positions[p]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            ok = forbidden is None or not contains_through_edge(forbidden, rows, n, i, j)
            if ok and is_canonical_rows(rows, n):
                yield from walk(p)
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)

    yield from walk(-1)
