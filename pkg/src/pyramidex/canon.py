"""Canonical forms for small graphs.

The canonical form of a graph is the labelling whose upper-triangle
adjacency string, read in column order ``(0,1), (0,2), (1,2), (0,3), ...``,
is lexicographically *largest* over all ``n!`` labellings.  The maximum is
found by branch-and-bound: the vertex placed at position ``j`` fixes column
``j`` of the string, so candidates whose column is below the best prefix are
cut immediately.  Interchangeable vertices (twins) are only branched on once.

Taking the maximum over all labellings (instead of over orderings that
respect a refined partition) gives the parent property used by orderly
generation: deleting the last edge of a canonical string leaves a canonical
string.
"""
from __future__ import annotations

from typing import Sequence

from .errors import CapabilityError
from .graph import Graph, iter_bits

CANONICAL_LIMIT = 12


def _twin_pairs(rows: Sequence[int], n: int) -> set[tuple[int, int]]:
    pairs = set()
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            rb = rows[b]
            if ra & ~(1 << b) == rb & ~(1 << a):
                pairs.add((a, b))
                pairs.add((b, a))
    return pairs


def _identity_columns(rows: Sequence[int], n: int) -> list[int]:
    cols = []
    for j in range(n):
        c = 0
        for i in range(j):
            c = (c << 1) | (rows[i] >> j & 1)
        cols.append(c)
    return cols


class _Search:
    """Depth-first search over labellings maximising the column string.

    With ``target`` given, the search instead answers "is any labelling
    strictly above ``target``?" and stops at the first witness.
    """

    def __init__(self, rows: Sequence[int], n: int, target: list[int] | None = None):
        self.rows = rows
        self.n = n
        self.twins = _twin_pairs(rows, n)
        self.best = list(target) if target is not None else None
        self.best_perm: list[int] | None = None
        self.check_only = target is not None
        self.beaten = False

    def run(self):
        n = self.n
        self._place(0, [], (1 << n) - 1, [0] * n, True)

    def _place(self, j, perm, remaining, cols, tied):
        if j == self.n:
            if not tied or self.best_perm is None:
                self.best_perm = list(perm)
            return
        top = -1
        for w in iter_bits(remaining):
            if cols[w] > top:
                top = cols[w]
        best = self.best
        if best is None:
            self.best = best = [0] * self.n
            tied = False
        if tied:
            if top < best[j]:
                return
            if top > best[j]:
                if self.check_only:
                    self.beaten = True
                    return
                tied = False
        if not tied:
            best[j] = top
        rows = self.rows
        tried: list[int] = []
        for w in iter_bits(remaining):
            if cols[w] != top:
                continue
            if any((t, w) in self.twins for t in tried):
                continue
            tried.append(w)
            rw = rows[w]
            rest = remaining & ~(1 << w)
            new_cols = cols[:]
            for x in iter_bits(rest):
                new_cols[x] = (cols[x] << 1) | (rw >> x & 1)
            perm.append(w)
            self._place(j + 1, perm, rest, new_cols, tied)
            perm.pop()
            if self.beaten:
                return
            # After the first completed branch the best string is fixed
            # up to position j; later siblings must compare against it.
            tied = True


def _check_size(n: int, limit: int) -> None:
    if n > limit:
        raise CapabilityError(f"canonical forms are limited to n <= {limit} (got n={n})")


def canonical_labeling(g: Graph, limit: int = CANONICAL_LIMIT) -> tuple[int, ...]:
    """Return ``order`` such that ``order[p]`` is the vertex placed at position ``p``."""
    _check_size(g.n, limit)
    if g.n == 0:
        return ()
    s = _Search(g.rows, g.n)
    s.run()
    return tuple(s.best_perm)


def canonical_graph(g: Graph, limit: int = CANONICAL_LIMIT) -> Graph:
    order = canonical_labeling(g, limit)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def _pack(n: int, cols: Sequence[int]) -> bytes:
    bits = 0
    nbits = 0
    for j in range(1, n):
        bits = (bits << j) | cols[j]
        nbits += j
    return bytes([n]) + bits.to_bytes((nbits + 7) // 8, "big")


def canonical_code(g: Graph, limit: int = CANONICAL_LIMIT) -> bytes:
    """Isomorphism-complete invariant: equal codes iff isomorphic graphs.

    The code is the vertex count byte followed by the packed maximal
    column-order adjacency string.
    """
    cg = canonical_graph(g, limit)
    return _pack(cg.n, _identity_columns(cg.rows, cg.n))


def is_canonical_rows(rows: Sequence[int], n: int) -> bool:
    """True iff the given labelling already attains the maximal string."""
    if n <= 1:
        return True
    s = _Search(rows, n, target=_identity_columns(rows, n))
    s.run()
    return not s.beaten


def is_canonical(g: Graph) -> bool:
    return is_canonical_rows(g.rows, g.n)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_code(g1) == canonical_code(g2)
