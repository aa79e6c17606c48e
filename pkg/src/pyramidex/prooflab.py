"""Executable versions of the TP_4 upper-bound argument's procedures.

Degree peeling, locally optimal max-cut, the R/W decomposition with its
diagnostics, common-neighbour selection, extension of a 6-cycle to the
gadget F, and the explicit TP_4 embedding into K_{s,t} plus F.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .canon import canonical_code
from .errors import BudgetExceeded, ConsistencyError
from .generators import complete_bipartite, cycle_graph, graph_f, triangular_pyramid
from .graph import Graph, induced_subgraph, iter_bits, mask_of
from .subiso import DEFAULT_BUDGET, Embedding, find_embedding, verify_embedding
from .turan import h

DEFAULT_EPSILON = 1e-3


@dataclass
class PeelTrace:
    """Ordered record of vertex deletions.

    ``removed`` holds ``(vertex, degree_at_removal, threshold)`` with original
    vertex labels; ``remaining`` lists the surviving original vertices in the
    order used by ``final_graph``.
    """

    n: int
    initial_edges: int
    removed: list[tuple[int, int, int]]
    final_graph: Graph
    remaining: tuple[int, ...]

    @property
    def t(self) -> int:
        return self.final_graph.n

    @property
    def final_edges(self) -> int:
        return self.final_graph.edge_count

    @property
    def peel_bound(self) -> int:
        """h(t) + n - t, the lower bound on e(G_t) when e(G) >= h(n)."""
        return h(self.t) + self.n - self.t

    @property
    def start_condition(self) -> bool:
        return self.initial_edges >= h(self.n)

    @property
    def bound_holds(self) -> bool:
        return self.final_edges >= self.peel_bound

    def to_csv(self) -> str:
        lines = ["step,vertex,degree,threshold"]
        lines += [f"{i},{v},{d},{t}" for i, (v, d, t) in enumerate(self.removed)]
        return "\n".join(lines) + "\n"


def _peel(g: Graph, threshold) -> PeelTrace:
    rows = list(g.rows)
    alive = (1 << g.n) - 1
    size = g.n
    deg = [r.bit_count() for r in rows]
    removed = []
    while alive:
        thr = threshold(size)
        best = None
        for v in iter_bits(alive):
            if deg[v] <= thr and (best is None or deg[v] < deg[best]):
                best = v
        if best is None:
            break
        removed.append((best, deg[best], thr))
        alive &= ~(1 << best)
        for u in iter_bits(rows[best] & alive):
            deg[u] -= 1
        size -= 1
    final, remaining = induced_subgraph(g, iter_bits(alive))
    return PeelTrace(g.n, g.edge_count, removed, final, remaining)


def peel_to_min_degree(g: Graph, d: int) -> PeelTrace:
    """Delete vertices of degree < d (lowest degree, then lowest index) until none remain."""
    if d < 0:
        raise ValueError("degree bound must be non-negative")
    return _peel(g, lambda size: d - 1)


def turan_peel(g: Graph) -> PeelTrace:
    """Delete a vertex of degree <= h(i) - h(i-1) - 1 = floor(i/2) - 1 while one exists."""
    return _peel(g, lambda size: h(size) - h(size - 1) - 1)


@dataclass(frozen=True)
class Cut:
    """A bipartition with its statistics; locally optimal if no single move helps."""

    x1: frozenset
    x2: frozenset
    cut_edges: int
    internal_edges: tuple[int, int]
    seed: int | None = None

    def side_of(self, v: int) -> int:
        return 0 if v in self.x1 else 1


def _cut_stats(g: Graph, side1: int) -> tuple[int, tuple[int, int]]:
    full = (1 << g.n) - 1
    side2 = full & ~side1
    cross = in1 = in2 = 0
    for v in range(g.n):
        r = g.rows[v]
        if side1 >> v & 1:
            cross += (r & side2).bit_count()
            in1 += (r & side1).bit_count()
        else:
            in2 += (r & side2).bit_count()
    return cross, (in1 // 2, in2 // 2)


def make_cut(g: Graph, x1, seed=None) -> Cut:
    side1 = mask_of(x1)
    cross, internal = _cut_stats(g, side1)
    full = (1 << g.n) - 1
    return Cut(frozenset(iter_bits(side1)), frozenset(iter_bits(full & ~side1)),
               cross, internal, seed)


def local_max_cut(g: Graph, seed: int = 0) -> Cut:
    """Random start, then single-vertex moves while one strictly increases the cut.

    The result is a local optimum: every vertex has at least as many
    neighbours across the cut as on its own side.  It is not claimed to be a
    maximum cut.
    """
    rng = random.Random(seed)
    side1 = 0
    for v in range(g.n):
        if rng.random() < 0.5:
            side1 |= 1 << v
    full = (1 << g.n) - 1
    moved = True
    while moved:
        moved = False
        for v in range(g.n):
            mine = side1 if side1 >> v & 1 else full & ~side1
            r = g.rows[v]
            internal = (r & mine).bit_count()
            if internal > r.bit_count() - internal:
                side1 ^= 1 << v
                moved = True
    return make_cut(g, iter_bits(side1), seed)


@dataclass
class ClaimResult:
    ok: bool
    detail: dict = field(default_factory=dict)


@dataclass
class StructureReport:
    n: int
    edges: int
    epsilon: float
    lam: float
    cut: Cut
    r_sets: tuple[frozenset, frozenset]
    w_sets: tuple[frozenset, frozenset]
    internal_below_eps: bool
    claim1: ClaimResult
    claim2: ClaimResult
    claim3: ClaimResult
    claim4: ClaimResult
    min_cross_degree_w: tuple[int | None, int | None]
    note: str = ("partition is a local optimum of single-vertex moves, "
                 "not a certified maximum cut")

    def to_json(self) -> dict:
        def s(vs):
            return sorted(vs)

        def claim(c: ClaimResult):
            return {"ok": c.ok, **c.detail}

        return {
            "note": self.note,
            "n": self.n,
            "edges": self.edges,
            "epsilon": self.epsilon,
            "lambda": self.lam,
            "partition": {"X1": s(self.cut.x1), "X2": s(self.cut.x2)},
            "cross_edges": self.cut.cut_edges,
            "internal_edges": list(self.cut.internal_edges),
            "internal_below_eps_n2": self.internal_below_eps,
            "R1": s(self.r_sets[0]),
            "R2": s(self.r_sets[1]),
            "W1": s(self.w_sets[0]),
            "W2": s(self.w_sets[1]),
            "claim1": claim(self.claim1),
            "claim2": claim(self.claim2),
            "claim3": claim(self.claim3),
            "claim4": claim(self.claim4),
            "min_cross_degree_W": list(self.min_cross_degree_w),
            "seed": self.cut.seed,
        }


def structure_report(g: Graph, epsilon: float = DEFAULT_EPSILON, partition: Cut | None = None,
                     seed: int = 0, budget: int = DEFAULT_BUDGET) -> StructureReport:
    """Evaluate the R/W decomposition and the four claims on ``g``.

    The claims are checked, not assumed: on arbitrary graphs any of them may
    fail, and the failing vertex or F-copy is reported.
    """
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    n = g.n
    cut = partition if partition is not None else local_max_cut(g, seed)
    lam = (4 * epsilon) ** (1 / 3)
    sides = (mask_of(cut.x1), mask_of(cut.x2))

    r_masks = []
    for i in (0, 1):
        r_masks.append(mask_of(v for v in iter_bits(sides[i])
                               if (g.rows[v] & sides[i]).bit_count() > lam * n))
    r_all = r_masks[0] | r_masks[1]
    w_masks = (sides[0] & ~r_all, sides[1] & ~r_all)

    internal_total = sum(cut.internal_edges)
    internal_below_eps = internal_total < epsilon * n * n

    limit1 = (0.5 + math.sqrt(epsilon)) * n
    sizes = (len(cut.x1), len(cut.x2))
    claim1 = ClaimResult(all(s <= limit1 for s in sizes),
                         {"sizes": list(sizes), "limit": limit1})

    r_size = r_all.bit_count()
    claim2 = ClaimResult(r_size < lam * n / 2,
                         {"R_size": r_size, "R_ratio": r_size / n if n else 0.0,
                          "limit": lam * n / 2})

    bar = n // 2 - 1.5 * lam * n
    min_cross = []
    violator = None
    for i in (0, 1):
        other = w_masks[1 - i]
        degs = [(v, (g.rows[v] & other).bit_count()) for v in iter_bits(w_masks[i])]
        min_cross.append(min((d for _, d in degs), default=None))
        for v, d in degs:
            if d <= bar and violator is None:
                violator = {"vertex": v, "side": i + 1, "cross_degree": d}
    claim3 = ClaimResult(violator is None, {"threshold": bar, "violation": violator})

    f = graph_f()
    claim4 = ClaimResult(True, {"witness": None})
    for i in (0, 1):
        sub, old = induced_subgraph(g, iter_bits(w_masks[i]))
        try:
            emb = find_embedding(f, sub, budget)
        except BudgetExceeded:
            claim4 = ClaimResult(False, {"witness": None, "side": i + 1, "inconclusive": True})
            break
        if emb is not None:
            claim4 = ClaimResult(False, {"witness": [old[x] for x in emb.mapping], "side": i + 1})
            break

    return StructureReport(
        n=n, edges=g.edge_count, epsilon=epsilon, lam=lam, cut=cut,
        r_sets=tuple(frozenset(iter_bits(m)) for m in r_masks),
        w_sets=tuple(frozenset(iter_bits(m)) for m in w_masks),
        internal_below_eps=internal_below_eps,
        claim1=claim1, claim2=claim2, claim3=claim3, claim4=claim4,
        min_cross_degree_w=tuple(min_cross),
    )


def find_common_neighbors(g: Graph, y, candidates, k: int) -> frozenset | None:
    """The ``k`` lowest-index vertices of ``candidates`` adjacent to all of ``y``."""
    y = list(y)
    if not y:
        raise ValueError("y must be non-empty")
    common = mask_of(candidates)
    for v in y:
        common &= g.rows[v]
    if common.bit_count() < k:
        return None
    out = []
    for v in iter_bits(common):
        if len(out) == k:
            break
        out.append(v)
    return frozenset(out)


def extend_cycle_to_f(g: Graph, c6: Embedding) -> Embedding | None:
    """Extend a 6-cycle in ``g`` to a copy of F by hanging a 2-path off two antipodal vertices.

    The cycle is tried as x_3..x_8 in all 12 rotations and reflections; the
    pendant paths x_2 x_1 (at x_3) and x_9 x_10 (at x_8) are chosen
    lowest-index first with backtracking.
    """
    ok, why = verify_embedding(c6)
    if not ok:
        raise ValueError(f"invalid 6-cycle embedding: {why}")
    if c6.host != g:
        raise ValueError("6-cycle embedding belongs to a different host")
    pat = c6.pattern
    if pat.n != 6 or pat.edge_count != 6 or any(pat.degree(v) != 2 for v in range(6)):
        raise ValueError("pattern of the cycle embedding is not C_6")
    seq = [0]
    while len(seq) < 6:
        nxt = [u for u in pat.neighbors(seq[-1]) if u not in seq]
        if not nxt:
            raise ValueError("pattern of the cycle embedding is not C_6")
        seq.append(nxt[0])
    cyc = [c6.mapping[p] for p in seq]
    orientations = []
    for r in range(6):
        rot = cyc[r:] + cyc[:r]
        orientations.append(rot)
        orientations.append([rot[0]] + rot[:0:-1])
    rows = g.rows
    cyc_mask = mask_of(cyc)
    for ori in orientations:
        x3, x8 = ori[0], ori[5]
        for x2 in iter_bits(rows[x3] & ~cyc_mask):
            used2 = cyc_mask | (1 << x2)
            for x1 in iter_bits(rows[x2] & ~used2):
                used1 = used2 | (1 << x1)
                for x9 in iter_bits(rows[x8] & ~used1):
                    used9 = used1 | (1 << x9)
                    x10_cands = rows[x9] & ~used9
                    if x10_cands:
                        x10 = (x10_cands & -x10_cands).bit_length() - 1
                        mapping = (x1, x2, *ori, x9, x10)
                        return Embedding(graph_f(), g, mapping)
    return None


@dataclass(frozen=True)
class PyramidColoring:
    """Colour classes of TP_4 with V_1 ∪ V_2 inducing F and V_3 independent.

    ``f_iso[x]`` is the TP_4 vertex playing the role of F-vertex ``x``.
    """

    v1: frozenset
    v2: frozenset
    v3: frozenset
    f_iso: tuple[int, ...]


def _proper_3_colorings(g: Graph):
    n = g.n
    colors = [-1] * n

    def rec(v):
        if v == n:
            yield tuple(colors)
            return
        for c in range(3):
            if all(colors[u] != c for u in g.neighbors(v) if u < v):
                colors[v] = c
                yield from rec(v + 1)
        colors[v] = -1

    yield from rec(0)


@lru_cache(maxsize=1)
def tp4_coloring() -> PyramidColoring:
    tp4 = triangular_pyramid(4).graph
    f = graph_f()
    f_code = canonical_code(f)
    for colors in _proper_3_colorings(tp4):
        classes = [frozenset(v for v in range(tp4.n) if colors[v] == c) for c in range(3)]
        for third in (2, 1, 0):
            v3 = classes[third]
            if len(v3) != 5:
                continue
            rest = [classes[c] for c in range(3) if c != third]
            sub, old = induced_subgraph(tp4, rest[0] | rest[1])
            if sub.n != 10 or canonical_code(sub) != f_code:
                continue
            emb = find_embedding(f, sub)
            if emb is None:  # pragma: no cover - same canonical code
                continue
            return PyramidColoring(rest[0], rest[1], v3, tuple(old[x] for x in emb.mapping))
    raise ConsistencyError("no proper 3-colouring of TP_4 splits off F; this contradicts the construction")


def embed_tp4_constructive(s: int, t: int) -> tuple[Graph, Embedding]:
    """K_{s,t} with F on vertices 0..9 of the s-part, and an explicit TP_4 in it.

    F-vertices go to the planted copy, the independent class V_3 to the
    first five vertices of the t-part.
    """
    if s < 10:
        raise ValueError(f"s must be at least 10 to hold F (got {s})")
    if t < 5:
        raise ValueError(f"t must be at least 5 to hold the independent class (got {t})")
    base, _, _ = complete_bipartite(s, t)
    host = base.with_edges(graph_f().edges())
    col = tp4_coloring()
    tp4 = triangular_pyramid(4).graph
    mapping = [-1] * tp4.n
    for x, v in enumerate(col.f_iso):
        mapping[v] = x
    for i, v in enumerate(sorted(col.v3)):
        mapping[v] = s + i
    emb = Embedding(tp4, host, tuple(mapping))
    ok, why = verify_embedding(emb)
    if not ok:
        raise ConsistencyError(f"constructed TP_4 embedding is invalid: {why}")
    return host, emb


def cycle6() -> Graph:
    return cycle_graph(6)
