import json
from itertools import combinations

import pytest

from pyramidex.canon import canonical_code
from pyramidex.errors import CapabilityError, ValidationError
from pyramidex.generators import (complete_bipartite, complete_graph, cycle_graph, graph_f,
                                  path_graph, triangular_pyramid, turan_graph)
from pyramidex.graph import Graph
from pyramidex.turan import (BUDGET_EXCEEDED, EXACT, TuranRecord, exact_ex, h, orderly_graphs,
                             verify_record)

from conftest import brute_has_embedding

K3 = complete_graph(3)


def brute_ex(n, pattern):
    pairs = list(combinations(range(n), 2))
    best = 0
    for m in range(1 << len(pairs)):
        e = bin(m).count("1")
        if e <= best:
            continue
        g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if m >> i & 1])
        if not brute_has_embedding(pattern, g):
            best = e
    return best


class TestH:
    def test_values(self):
        assert h(6) == 9
        assert h(7) - h(6) == 3

    def test_increment_identity(self):
        for n in range(1, 10 ** 4 + 1):
            assert h(n) - h(n - 1) == n // 2


class TestOrderly:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156),
                                         (7, 1044)])
    def test_all_graphs(self, n, count):
        assert sum(1 for _ in orderly_graphs(n)) == count

    def test_triangle_free_counts(self):
        assert [sum(1 for _ in orderly_graphs(n, K3)) for n in range(1, 9)] == \
            [1, 2, 3, 7, 14, 38, 107, 410]

    def test_pairwise_non_isomorphic(self):
        codes = [canonical_code(g) for g in orderly_graphs(6)]
        assert len(set(codes)) == len(codes)


class TestExactEx:
    def test_mantel_n5(self):
        rec = exact_ex(5, K3)
        assert rec.status == EXACT and rec.value == 6
        assert [canonical_code(w) for w in rec.witnesses] == \
            [canonical_code(complete_bipartite(2, 3)[0])]

    def test_p3(self):
        assert exact_ex(5, path_graph(3)).value == 2

    @pytest.mark.parametrize("n", [5, 10, 14])
    def test_pattern_larger_than_host(self, n):
        rec = exact_ex(n, triangular_pyramid(4).graph)
        assert rec.value == n * (n - 1) // 2
        assert rec.witnesses == [complete_graph(n)]

    @pytest.mark.parametrize("pattern", [K3, path_graph(3), cycle_graph(4), cycle_graph(5),
                                         complete_graph(4), path_graph(4)],
                             ids=["K3", "P3", "C4", "C5", "K4", "P4"])
    def test_against_brute_force(self, pattern):
        for n in range(max(3, pattern.n), 6):
            assert exact_ex(n, pattern).value == brute_ex(n, pattern)

    def test_known_c4_values(self):
        # Zarankiewicz-type small values of ex(n, C_4)
        assert [exact_ex(n, cycle_graph(4)).value for n in range(4, 11)] == \
            [4, 6, 7, 9, 11, 13, 16]

    def test_witnesses_valid_and_distinct(self):
        rec = exact_ex(8, cycle_graph(4))
        assert verify_record(rec)
        codes = rec.witness_codes
        assert len(codes) == len(set(codes)) == 5

    def test_tp1_matches_k3(self):
        tp1 = triangular_pyramid(1).graph
        for n in range(3, 9):
            a, b = exact_ex(n, tp1), exact_ex(n, K3)
            assert a.value == b.value and a.witness_codes == b.witness_codes

    def test_monotone_in_n(self):
        for pattern in (K3, cycle_graph(4), triangular_pyramid(2).graph):
            values = [exact_ex(n, pattern).value for n in range(3, 10)]
            assert values == sorted(values)

    def test_supermonotone_small(self):
        for n in range(3, 10):
            assert exact_ex(n, cycle_graph(6)).value <= exact_ex(n, graph_f()).value

    @pytest.mark.slow
    def test_supermonotone_c6_f_n10(self):
        assert exact_ex(10, cycle_graph(6)).value == 21
        assert exact_ex(10, graph_f()).value == 36

    def test_budget_label(self):
        rec = exact_ex(9, K3, budget=20)
        assert rec.status == BUDGET_EXCEEDED
        assert rec.value == h(9)
        assert verify_record(rec)

    def test_caps(self):
        with pytest.raises(CapabilityError):
            exact_ex(11, K3)
        with pytest.raises(CapabilityError):
            exact_ex(11, K3, max_n=13)
        with pytest.raises(ValueError):
            exact_ex(5, Graph.from_edges(4, [(0, 1), (2, 3)]))


class TestRecords:
    def test_verify_mantel(self):
        rec = TuranRecord(5, K3, 6, [complete_bipartite(2, 3)[0]])
        assert verify_record(rec)

    def test_witness_contains_pattern(self):
        assert not verify_record(TuranRecord(5, K3, 10, [complete_graph(5)]))

    def test_wrong_edge_count(self):
        assert not verify_record(TuranRecord(5, K3, 5, [complete_bipartite(2, 3)[0]]))

    def test_malformed(self):
        with pytest.raises(ValidationError):
            verify_record(TuranRecord(5, K3, 6, ["not a graph"]))
        with pytest.raises(ValidationError):
            TuranRecord.from_json({"n": 5, "pattern": "Bw", "value": 6, "witnesses": ["D!!"]})

    def test_json_round_trip(self):
        rec = exact_ex(6, K3)
        data = json.loads(rec.dumps())
        assert set(data) == {"n", "pattern", "pattern_code", "value", "status", "witnesses",
                             "nodes_explored"}
        back = TuranRecord.from_json(data)
        assert back.value == 9 and verify_record(back)
        assert canonical_code(back.witnesses[0]) == canonical_code(turan_graph(6, 2))
