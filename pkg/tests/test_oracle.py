from itertools import combinations

import networkx as nx
import pytest

from app.core.exceptions import OracleCeilingError
from app.services.cache_service import JsonLinesCache, NullCache
from app.src.extremal import bound_report
from app.src.graphs import build_graph, distance_degrees, from_graph6, is_bipartite, is_connected, peripheral_vertices
from app.src.oracle import GraphFilter, OracleResult, enumerate_connected_bipartite, oracle_max_size, random_constrained_graph
from app.src.optimizer import is_class_feasible
from app.src.sequences import Sequence, check, f_value
from app.src.witness import sequential_sum
from tests.helpers import kappa, lam


def naive_count(order):
    pairs = list(combinations(range(order), 2))
    total = 0
    for mask in range(1 << len(pairs)):
        g = build_graph(order, [e for bit, e in enumerate(pairs) if mask >> bit & 1])
        if is_connected(g) and is_bipartite(g):
            total += 1
    return total


class TestEnumeration:
    @pytest.mark.parametrize("order, expected", [(1, 1), (2, 1), (3, 3), (4, 19)])
    def test_small_counts(self, order, expected):
        assert sum(1 for _ in enumerate_connected_bipartite(order)) == expected

    @pytest.mark.parametrize("order", [5, 6])
    def test_matches_all_subsets(self, order):
        assert sum(1 for _ in enumerate_connected_bipartite(order)) == naive_count(order)

    def test_each_graph_once(self):
        found = [g.edges() for g in enumerate_connected_bipartite(5)]
        assert len(found) == len({tuple(e) for e in found})

    def test_filter_applies(self):
        c = kappa(2, 6, 3)
        graphs = list(enumerate_connected_bipartite(6, GraphFilter.from_constraints(c)))
        assert graphs
        assert all(GraphFilter.from_constraints(c).accepts(g) for g in graphs)
        assert max(g.size for g in graphs) == 8

    def test_ceiling(self):
        with pytest.raises(OracleCeilingError):
            list(enumerate_connected_bipartite(11))
        with pytest.raises(OracleCeilingError):
            oracle_max_size(kappa(2, 11, 3))


class TestMaxSize:
    def test_single_witness(self):
        result = oracle_max_size(kappa(2, 6, 3))
        assert result.feasible and result.max_size == 8
        assert result.witness_count == 1
        witness = from_graph6(result.witnesses[0]).to_networkx()
        assert nx.is_isomorphic(witness, sequential_sum(Sequence((1, 2, 2, 1))).to_networkx())

    def test_matches_bound(self):
        assert oracle_max_size(kappa(2, 7, 3)).max_size == 11 == bound_report(kappa(2, 7, 3)).bound

    def test_empty_class(self):
        result = oracle_max_size(kappa(2, 7, 4))
        assert not result.feasible
        assert result.max_size is None and result.witnesses == []

    def test_json_round_trip(self):
        result = oracle_max_size(kappa(2, 6, 3))
        assert OracleResult.model_validate_json(result.model_dump_json(indent=2)) == result
        assert "elapsed" not in result.model_dump()

    def test_parallel_matches_serial(self):
        c = kappa(2, 8, 3)
        assert oracle_max_size(c, jobs=2) == oracle_max_size(c, jobs=1)

    def test_cache_round_trip(self, tmp_cache_path):
        c = kappa(2, 6, 3)
        first = oracle_max_size(c, cache=JsonLinesCache(tmp_cache_path))
        assert tmp_cache_path.exists()
        again = oracle_max_size(c, cache=JsonLinesCache(tmp_cache_path))
        assert again == first

    def test_null_cache(self):
        assert oracle_max_size(kappa(2, 6, 3), cache=NullCache()).max_size == 8

    @pytest.mark.slow
    def test_lambda_diameter_five(self):
        assert oracle_max_size(lam(2, 9, 5)).max_size == 12

    @pytest.mark.slow
    @pytest.mark.parametrize("make", [kappa, lam])
    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_sweep_agrees_with_bound(self, make, d):
        for n in range(d + 1, 10):
            c = make(2, n, d)
            result = oracle_max_size(c)
            if not is_class_feasible(c):
                assert not result.feasible, c.label()
                continue
            assert result.max_size == bound_report(c).bound, c.label()


class TestRandomGraphs:
    def test_same_seed_same_graph(self):
        c = kappa(2, 10, 4)
        assert random_constrained_graph(c, seed=7) == random_constrained_graph(c, seed=7)

    def test_stays_in_class(self):
        c = kappa(2, 6, 3)
        for seed in range(30):
            g = random_constrained_graph(c, seed=seed)
            assert 6 <= g.size <= 8
            assert GraphFilter.from_constraints(c).accepts(g)

    @pytest.mark.parametrize("c", [kappa(2, 10, 4), kappa(3, 12, 3), lam(2, 11, 5), lam(3, 14, 6)], ids=lambda c: c.label())
    def test_size_below_every_peripheral_profile(self, c):
        bound = bound_report(c).bound
        for seed in range(15):
            g = random_constrained_graph(c, seed=seed)
            assert g.size <= bound
            for u in peripheral_vertices(g):
                x = Sequence(distance_degrees(g, u))
                assert g.size <= f_value(x)
                if c.kind.value == "kappa":
                    assert check(x, c, relax_last=True) == []

    @pytest.mark.slow
    def test_thousand_instances(self):
        classes = [kappa(2, 10, 4), kappa(2, 12, 5), lam(2, 12, 6), lam(3, 13, 5)]
        for seed in range(1000):
            c = classes[seed % len(classes)]
            g = random_constrained_graph(c, seed=seed)
            assert g.size <= bound_report(c).bound
            assert all(g.size <= f_value(Sequence(distance_degrees(g, u))) for u in peripheral_vertices(g))
