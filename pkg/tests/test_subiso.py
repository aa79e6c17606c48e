import random
from itertools import combinations

import pytest

from pyramidex.errors import BudgetExceeded, CapabilityError
from pyramidex.generators import (complete_bipartite, complete_graph, cycle_graph, graph_f,
                                  high_girth_bipartite, path_graph, triangular_pyramid,
                                  turan_graph)
from pyramidex.graph import Graph
from pyramidex.subiso import (Embedding, Freeness, count_bicliques, find_embedding,
                              independent_sets, is_free, verify_embedding)

from conftest import brute_has_embedding, random_graph


def k_ab_plus_f(a=10, b=10):
    g, left, right = complete_bipartite(a, b)
    return g.with_edges(graph_f().edges()), left, right


class TestFindEmbedding:
    def test_no_triangle_in_bipartite(self):
        assert find_embedding(complete_graph(3), complete_bipartite(5, 5)[0]) is None

    def test_c6_in_f(self):
        emb = find_embedding(cycle_graph(6), graph_f())
        assert verify_embedding(emb) == (True, None)
        assert sorted(emb.mapping) == [2, 3, 4, 5, 6, 7]

    def test_tp4_in_kab_plus_f(self):
        host, _, _ = k_ab_plus_f()
        emb = find_embedding(triangular_pyramid(4).graph, host)
        assert emb is not None and verify_embedding(emb)[0]

    def test_f_in_tp4(self):
        # frozen ground truth: F is a subgraph of TP_4
        emb = find_embedding(graph_f(), triangular_pyramid(4).graph)
        assert emb is not None and verify_embedding(emb)[0]

    def test_budget_is_not_none(self):
        with pytest.raises(BudgetExceeded):
            find_embedding(complete_graph(6), turan_graph(30, 5), budget=50)

    def test_deterministic_least_witness(self):
        host = complete_graph(6)
        e1 = find_embedding(cycle_graph(4), host)
        assert e1.mapping == find_embedding(cycle_graph(4), host).mapping
        assert e1.mapping == (0, 1, 2, 3)

    def test_brute_force_agreement_random(self, rng):
        for _ in range(200):
            p = random_graph(rng, rng.randint(1, 5))
            h = random_graph(rng, rng.randint(1, 7))
            found = find_embedding(p, h)
            assert (found is not None) == brute_has_embedding(p, h)
            if found:
                assert verify_embedding(found)[0]

    def test_monotonicity(self, rng):
        for _ in range(100):
            p2 = random_graph(rng, rng.randint(2, 5))
            edges = list(p2.edges())
            p1 = Graph.from_edges(p2.n, rng.sample(edges, rng.randint(0, len(edges))))
            h = random_graph(rng, rng.randint(2, 8))
            if find_embedding(p2, h) is not None:
                assert find_embedding(p1, h) is not None


class TestIsFree:
    def test_bipartite_triangle_free(self):
        assert is_free(turan_graph(20, 2), complete_graph(3)).verdict is Freeness.YES

    def test_k4_has_c4(self):
        res = is_free(complete_graph(4), cycle_graph(4))
        assert res.verdict is Freeness.NO
        assert verify_embedding(res.witness)[0]

    def test_high_girth_c6_free(self):
        g, _, _ = high_girth_bipartite(3)
        assert is_free(g, cycle_graph(6)).verdict is Freeness.YES

    def test_inconclusive(self):
        res = is_free(turan_graph(30, 5), complete_graph(6), budget=50)
        assert res.verdict is Freeness.INCONCLUSIVE and res.witness is None

    def test_c6_free_implies_f_free(self, rng):
        for _ in range(200):
            g = random_graph(rng, rng.randint(6, 14), rng.random() * 0.35)
            if is_free(g, cycle_graph(6)).verdict is Freeness.YES:
                assert is_free(g, graph_f()).verdict is Freeness.YES


class TestVerify:
    def test_identity(self):
        g = graph_f()
        assert verify_embedding(Embedding(g, g, tuple(range(10)))) == (True, None)

    def test_injectivity(self):
        ok, why = verify_embedding(Embedding(path_graph(2), complete_graph(3), (1, 1)))
        assert not ok and "both map" in why

    def test_edge_violation(self):
        ok, why = verify_embedding(Embedding(path_graph(3), path_graph(3), (0, 2, 1)))
        assert not ok and "non-edge" in why

    def test_missing_graph(self):
        with pytest.raises(ValueError):
            verify_embedding(Embedding(None, complete_graph(2), (0,)))


def brute_bicliques(g, r):
    total = 0
    for a in combinations(range(g.n), r):
        rest = [v for v in range(g.n) if v not in a]
        for b in combinations(rest, r):
            if a < b and all(g.has_edge(x, y) for x in a for y in b):
                total += 1
    return total


class TestBicliques:
    def test_examples(self):
        assert count_bicliques(complete_bipartite(2, 2)[0], 2) == 1
        assert count_bicliques(complete_graph(4), 2) == 3

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_against_brute(self, rng, r):
        for _ in range(30):
            g = random_graph(rng, rng.randint(2, 10))
            assert count_bicliques(g, r) == brute_bicliques(g, r)

    @pytest.mark.parametrize("r", [0, 4])
    def test_capability(self, r):
        with pytest.raises(CapabilityError):
            count_bicliques(complete_graph(4), r)


class TestIndependentSets:
    def test_k3(self):
        assert independent_sets(complete_graph(3)) == [frozenset(), {0}, {1}, {2}]

    def test_empty_graph(self):
        assert len(independent_sets(Graph.from_edges(3, []))) == 8

    def test_tp4_goldens(self):
        sets = independent_sets(triangular_pyramid(4).graph)
        assert len(sets) == 384
        assert max(map(len, sets)) == 6

    def test_against_naive_filter(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(0, 12))
            naive = [m for m in range(1 << g.n)
                     if all(not g.has_edge(u, v) for u, v in combinations(
                         [x for x in range(g.n) if m >> x & 1], 2))]
            got = independent_sets(g)
            assert [sum(1 << v for v in s) for s in got] == naive

    def test_capability(self):
        with pytest.raises(CapabilityError):
            independent_sets(Graph.from_edges(21, []))
