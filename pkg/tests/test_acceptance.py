"""End-to-end acceptance criteria.

Each criterion is a function returning ``(passed, detail)``.  Under pytest
they run as tests marked ``acceptance`` and a PASS/FAIL line per criterion is
printed in the terminal summary; ``python tests/test_acceptance.py`` prints
the same lines directly.
"""
import math
import random
import statistics
import sys
import time
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import brute_has_embedding, random_graph  # noqa: E402

from pyramidex.canon import canonical_code
from pyramidex.constructions import (REFUTED, Algebraic, assemble_host, lower_bound_graph,
                                     pyramid_free_certificate)
from pyramidex.generators import (complete_graph, cycle_graph, graph_f, high_girth_bipartite,
                                  triangular_pyramid, turan_graph)
from pyramidex.graph import Graph, girth, induced_subgraph
from pyramidex.prooflab import (embed_tp4_constructive, extend_cycle_to_f, local_max_cut,
                                tp4_coloring, turan_peel)
from pyramidex.subiso import (Freeness, count_bicliques, find_embedding, is_free,
                              verify_embedding)
from pyramidex.turan import EXACT, exact_ex, h, orderly_graphs

RESULTS: dict[int, tuple[bool, str, float]] = {}
TP4 = triangular_pyramid(4).graph
C6 = cycle_graph(6)


def mantel():
    bad = []
    for n in range(3, 11):
        rec = exact_ex(n, complete_graph(3))
        if not (rec.status == EXACT and rec.value == h(n) and len(rec.witnesses) == 1
                and canonical_code(rec.witnesses[0]) == canonical_code(turan_graph(n, 2))):
            bad.append(n)
    return not bad, f"n=3..10, failures {bad}"


def constructive_witness():
    host, emb = embed_tp4_constructive(10, 10)
    ok, _ = verify_embedding(emb)
    generic = find_embedding(TP4, host)
    ok2 = generic is not None and verify_embedding(generic)[0]
    return ok and ok2, f"constructive verifies: {ok}; generic search verifies: {ok2}"


def coloring():
    col = tp4_coloring()
    sub, _ = induced_subgraph(TP4, col.v1 | col.v2)
    iso = canonical_code(sub) == canonical_code(graph_f())
    indep = all(not TP4.has_edge(u, v) for u, v in combinations(col.v3, 2))
    return iso and indep and len(col.v3) == 5, f"V_3 = {sorted(col.v3)}, F-isomorph {iso}"


def goldens():
    tp1 = triangular_pyramid(1).graph
    f = graph_f()
    checks = [
        canonical_code(tp1) == canonical_code(complete_graph(3)),
        triangular_pyramid(2).graph.n == 6,
        (TP4.n, TP4.edge_count) == (15, 30),
        (f.n, f.edge_count) == (10, 10),
    ]
    return all(checks), f"TP_1~K_3, |TP_2|, TP_4 15/30, F 10/10: {checks}"


def peeling():
    rng = random.Random(5)
    violations = 0
    for _ in range(100):
        n = rng.randrange(2, 61)
        pairs = [(u, v) for v in range(n) for u in range(v)]
        rng.shuffle(pairs)
        g = Graph.from_edges(n, pairs[:min(len(pairs), h(n) + rng.randrange(n + 1))])
        tr = turan_peel(g)
        if not tr.bound_holds or (tr.t and tr.final_graph.min_degree() < tr.t // 2):
            violations += 1
    return violations == 0, f"100 graphs, {violations} violations"


def local_cut():
    rng = random.Random(6)
    violations = 0
    for s in range(200):
        g = random_graph(rng, rng.randrange(1, 40))
        cut = local_max_cut(g, seed=s)
        for v in range(g.n):
            own = cut.x1 if v in cut.x1 else cut.x2
            inside = sum(1 for u in g.neighbors(v) if u in own)
            if g.degree(v) - inside < inside:
                violations += 1
    return violations == 0, f"200 graphs, {violations} violating vertices"


def subiso_corpus():
    patterns = [g for k in range(1, 6) for g in orderly_graphs(k)]
    rng = random.Random(7)
    hosts = [random_graph(rng, rng.randrange(1, 9)) for _ in range(10)]
    pairs = [(p, hst) for p in patterns for hst in hosts][:500]
    mismatches = positives = 0
    for p, hst in pairs:
        truth = brute_has_embedding(p, hst)
        positives += truth
        mismatches += (find_embedding(p, hst) is not None) != truth
    return mismatches == 0, f"{len(pairs)} pairs ({positives} contain), {mismatches} mismatches"


def _quad_oracle(g):
    count = 0
    for a, b, c, d in combinations(range(g.n), 4):
        # the three ways to split four vertices into two pairs
        for (x1, x2), (y1, y2) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            if all(g.has_edge(x, y) for x in (x1, x2) for y in (y1, y2)):
                count += 1
    return count


def bicliques():
    rng = random.Random(8)
    bad = 0
    for _ in range(100):
        g = random_graph(rng, rng.randrange(1, 21))
        bad += count_bicliques(g, 2) != _quad_oracle(g)
    return bad == 0, f"100 graphs, {bad} mismatches"


def c6_in_f():
    emb = find_embedding(C6, graph_f())
    rng = random.Random(9)
    f = graph_f()
    c6_free = violations = 0
    for _ in range(200):
        g = random_graph(rng, rng.randrange(6, 16), rng.uniform(0.05, 0.4))
        if find_embedding(C6, g) is None:
            c6_free += 1
            violations += find_embedding(f, g) is not None
    ok = emb is not None and verify_embedding(emb)[0] and violations == 0
    return ok, f"C_6 -> F {emb.mapping if emb else None}; {c6_free} C_6-free graphs, {violations} with F"


def c6_extension():
    rng = random.Random(10)
    done = failures = 0
    while done < 50:
        g = random_graph(rng, rng.randrange(16, 30), 0.75)
        if g.min_degree() < 10:
            continue
        c = find_embedding(C6, g)
        if c is None:
            continue
        emb = extend_cycle_to_f(g, c)
        failures += emb is None or not verify_embedding(emb)[0]
        done += 1
    return failures == 0, f"50 graphs with min degree >= 10, {failures} failures"


def girth_gate():
    parts = []
    ok = True
    for q in (2, 3, 5):
        g, _, _ = high_girth_bipartite(q)
        gi = girth(g)
        free = is_free(g, C6).verdict is Freeness.YES
        ok &= gi >= 8 and g.edge_count == q ** 4 and free
        parts.append(f"q={q}: girth {gi}, {g.edge_count} edges, C_6-free {free}")
    return ok, "; ".join(parts)


def certificate_soundness():
    rng = random.Random(11)
    disagree = refuted = 0
    for _ in range(50):
        # remainders have at least 9 vertices, so keep the planted side big enough to refute
        a, b = rng.randrange(9, 15), rng.randrange(2, 8)
        planted = random_graph(rng, rng.randrange(6, a + 1), rng.uniform(0.2, 0.7))
        cert = pyramid_free_certificate(a, b, planted)
        direct = find_embedding(TP4, assemble_host(a, b, planted))
        refuted += cert.verdict == REFUTED
        disagree += (cert.verdict == REFUTED) != (direct is not None)
    return disagree == 0, f"50 instances ({refuted} refuted), {disagree} disagreements"


def scaling():
    xs, ys, verdicts = [], [], []
    for q in (3, 5, 7, 11):
        n = 4 * q ** 3
        _, man = lower_bound_graph(n, Algebraic(q))
        xs.append(math.log(n))
        ys.append(math.log(man.excess))
        verdicts.append(man.certificate.verdict)
    slope = statistics.linear_regression(xs, ys).slope
    ok = abs(slope - 4 / 3) <= 0.05 and REFUTED not in verdicts
    return ok, f"slope {slope:.4f} (target 1.3333 +/- 0.05), certificates {verdicts}"


CRITERIA = [
    (1, "Mantel reproduction", mantel),
    (2, "constructive TP_4 in K_{10,10}+F", constructive_witness),
    (3, "TP_4 colouring decomposition", coloring),
    (4, "structural goldens", goldens),
    (5, "peeling accounting", peeling),
    (6, "local-cut property", local_cut),
    (7, "subgraph search vs brute force", subiso_corpus),
    (8, "K_{2,2} counting", bicliques),
    (9, "C_6 inside F", c6_in_f),
    (10, "C_6 to F extension", c6_extension),
    (11, "high-girth gate", girth_gate),
    (12, "certificate soundness", certificate_soundness),
    (13, "n^{4/3} scaling surrogate", scaling),
]


def run_criterion(num, name, fn):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash counts as a failure with the reason shown
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    RESULTS[num] = (ok, f"{name}: {detail}", elapsed)
    return ok, detail


def format_line(num):
    ok, text, elapsed = RESULTS[num]
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d} ({elapsed:6.1f}s) {text}"


@pytest.mark.acceptance
@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, name, fn):
    ok, detail = run_criterion(num, name, fn)
    assert ok, detail


if __name__ == "__main__":
    for num, name, fn in CRITERIA:
        run_criterion(num, name, fn)
        print(format_line(num), flush=True)
    sys.exit(0 if all(r[0] for r in RESULTS.values()) else 1)
