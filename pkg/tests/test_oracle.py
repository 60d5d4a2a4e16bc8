import pytest

from turan_forge import build_graph, derive_params
from turan_forge.bounds import upper_bound_floor
from turan_forge.errors import BudgetExceededError
from turan_forge.graph import TripartiteGraph
from turan_forge.oracle import brute_force_extremal, candidate_edges, exact_extremal
from turan_forge.verifier import is_k2t_free


def witness_ok(result):
    g = TripartiteGraph.from_edges(result.n, result.witness_edges)
    return g.num_edges == result.exact_value and is_k2t_free(g, result.t)


class TestExact:
    def test_triangle(self):
        r = exact_extremal(1, 2)
        assert r.exact_value == 3
        assert sorted(r.witness_edges) == [(0, 1), (0, 2), (1, 2)]

    def test_n2_t2_against_enumeration(self):
        brute = brute_force_extremal(2, 2)
        assert brute.nodes_explored == 4096
        r = exact_extremal(2, 2)
        assert r.exact_value == brute.exact_value
        assert 7 <= r.exact_value <= 8
        assert witness_ok(r) and witness_ok(brute)

    def test_seven_edge_witness(self):
        # two disjoint triangles plus one cross edge
        g = TripartiteGraph.from_edges(2, [(0, 2), (0, 4), (2, 4), (1, 3), (1, 5), (3, 5), (0, 3)])
        assert is_k2t_free(g, 2)

    @pytest.mark.parametrize("n,t", [(1, 3), (2, 3), (2, 4), (2, 5)])
    def test_other_t_against_enumeration(self, n, t):
        assert exact_extremal(n, t).exact_value == brute_force_extremal(n, t).exact_value

    def test_n3_t2(self):
        r = exact_extremal(3, 2)
        construction = build_graph(derive_params(2, 3))
        assert construction.num_edges == 9
        assert 9 <= r.exact_value <= 14 == upper_bound_floor(3, 2)
        assert witness_ok(r)

    @pytest.mark.parametrize("seed", [1, 2])
    def test_order_independent(self, seed):
        assert exact_extremal(2, 2, seed=seed).exact_value == exact_extremal(2, 2).exact_value
        assert exact_extremal(2, 3, seed=seed).exact_value == exact_extremal(2, 3).exact_value

    def test_order_independent_n3(self):
        assert exact_extremal(3, 2, seed=7).exact_value == exact_extremal(3, 2, symmetry=False).exact_value

    @pytest.mark.parametrize("n,t", [(1, 2), (2, 2), (2, 3), (2, 4), (3, 2)])
    def test_below_upper_bound(self, n, t):
        assert exact_extremal(n, t).exact_value <= upper_bound_floor(n, t)

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            exact_extremal(3, 2, budget=50)
        assert info.value.best is not None and info.value.best >= 0

    def test_candidates(self):
        assert len(candidate_edges(3)) == 27
        assert len(candidate_edges(4)) == 48
