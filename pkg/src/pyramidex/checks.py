"""Self-check table behind the ``verify-paper`` subcommand."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .canon import canonical_code
from .constructions import (CERTIFIED, REFUTED, Algebraic, lower_bound_graph,
                            pyramid_free_certificate, reduced_pattern_girths)
from .generators import (complete_graph, cycle_graph, gnp, graph_f, high_girth_bipartite,
                         triangular_pyramid, turan_graph)
from .graph import Graph, girth, induced_subgraph
from .prooflab import embed_tp4_constructive, local_max_cut, tp4_coloring, turan_peel
from .subiso import Freeness, find_embedding, is_free, verify_embedding
from .turan import EXACT, exact_ex, h


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_mantel(max_n: int = 10) -> CheckResult:
    k3 = complete_graph(3)
    bad = []
    for n in range(3, max_n + 1):
        rec = exact_ex(n, k3)
        ok = (rec.status == EXACT and rec.value == h(n) and len(rec.witnesses) == 1
              and canonical_code(rec.witnesses[0]) == canonical_code(turan_graph(n, 2)))
        if not ok:
            bad.append(n)
    return CheckResult("mantel", not bad, f"n=3..{max_n}" + (f", failed at {bad}" if bad else ""))


def check_pyramid_goldens() -> CheckResult:
    tp1 = triangular_pyramid(1).graph
    tp2 = triangular_pyramid(2).graph
    tp4 = triangular_pyramid(4).graph
    f = graph_f()
    ok = (canonical_code(tp1) == canonical_code(complete_graph(3)) and tp2.n == 6
          and (tp4.n, tp4.edge_count) == (15, 30) and (f.n, f.edge_count) == (10, 10))
    return CheckResult("pyramid-goldens", ok,
                       f"TP_4: {tp4.n} vertices / {tp4.edge_count} edges; F: {f.n} / {f.edge_count}")


def check_coloring() -> CheckResult:
    col = tp4_coloring()
    tp4 = triangular_pyramid(4).graph
    sub, _ = induced_subgraph(tp4, col.v1 | col.v2)
    independent = all(not tp4.has_edge(u, v) for u in col.v3 for v in col.v3)
    ok = canonical_code(sub) == canonical_code(graph_f()) and len(col.v3) == 5 and independent
    return CheckResult("tp4-coloring", ok, f"V_3 = {sorted(col.v3)}")


def check_constructive_embedding() -> CheckResult:
    host, emb = embed_tp4_constructive(10, 10)
    ok1, _ = verify_embedding(emb)
    generic = find_embedding(triangular_pyramid(4).graph, host)
    ok2 = generic is not None and verify_embedding(generic)[0]
    return CheckResult("constructive-tp4", ok1 and ok2,
                       f"constructive={'ok' if ok1 else 'FAIL'}, generic={'ok' if ok2 else 'FAIL'}")


def check_girth_gates() -> CheckResult:
    parts = [girth(graph_f()) == 6]
    c6 = cycle_graph(6)
    for q in (2, 3, 5):
        g, _, _ = high_girth_bipartite(q)
        parts.append(girth(g) >= 8 and g.edge_count == q ** 4
                     and is_free(g, c6).verdict is Freeness.YES)
    return CheckResult("girth-gates", all(parts), "F girth 6; q=2,3,5 girth >= 8, C_6-free")


def _dense_random(n: int, rng: random.Random) -> Graph:
    # h(n) edges plus extras, with a few sparse vertices so peeling has work to do
    pairs = [(u, v) for v in range(n) for u in range(v)]
    rng.shuffle(pairs)
    sparse = set(rng.sample(range(n), rng.randint(0, n // 4)))
    dense_pairs = [e for e in pairs if not (set(e) & sparse)]
    other = [e for e in pairs if set(e) & sparse]
    need = h(n) + rng.randint(0, n)
    edges = dense_pairs[:need]
    if len(edges) < need:
        edges += other[:need - len(edges)]
    return Graph.from_edges(n, edges)


def peel_corpus(count: int = 100, seed: int = 0, max_n: int = 60) -> list[Graph]:
    rng = random.Random(seed)
    return [_dense_random(rng.randint(4, max_n), rng) for _ in range(count)]


def check_peeling(count: int = 20) -> CheckResult:
    bad = 0
    for g in peel_corpus(count):
        tr = turan_peel(g)
        if not (tr.start_condition and tr.bound_holds
                and tr.final_graph.min_degree() >= tr.t // 2):
            bad += 1
    return CheckResult("peel-accounting", bad == 0, f"{count} graphs, {bad} violations")


def check_local_cut(count: int = 50) -> CheckResult:
    rng = random.Random(1)
    bad = 0
    for i in range(count):
        g = gnp(rng.randint(2, 60), rng.random(), seed=i)
        cut = local_max_cut(g, seed=i)
        for v in range(g.n):
            mine = cut.x1 if v in cut.x1 else cut.x2
            internal = sum(1 for u in g.neighbors(v) if u in mine)
            if internal > g.degree(v) - internal:
                bad += 1
                break
    return CheckResult("local-cut", bad == 0, f"{count} graphs, {bad} violations")


def check_certificates() -> CheckResult:
    refuted = pyramid_free_certificate(10, 10, graph_f())
    _, manifest = lower_bound_graph(120, Algebraic(3))
    red = reduced_pattern_girths()
    ok = (refuted.verdict == REFUTED and verify_embedding(refuted.embedding)[0]
          and manifest.certificate.verdict == CERTIFIED and manifest.excess == 81)
    return CheckResult("certificates", ok,
                       f"g_max={red.g_max}; K_10,10+F refuted; n=120 algebraic(3) certified")


def check_c6_in_f() -> CheckResult:
    emb = find_embedding(cycle_graph(6), graph_f())
    return CheckResult("c6-in-f", emb is not None, f"C_6 -> F: {emb.mapping if emb else None}")


def run_all(mantel_max: int = 10) -> list[CheckResult]:
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_mantel(mantel_max), check_pyramid_goldens, check_coloring, check_constructive_embedding,
        check_girth_gates, check_peeling, check_local_cut, check_c6_in_f, check_certificates,
    ]
    return [c() for c in checks]
