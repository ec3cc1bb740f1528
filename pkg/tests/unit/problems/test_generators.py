"""Unit tests for instance generators."""

import pytest

from samba_gqw.exceptions import ValidationError
from samba_gqw.models import GraphKind
from samba_gqw.problems import (
    complete_graph,
    gen_erdos_renyi,
    gen_maxksat,
    gen_portfolio,
    gen_tsp,
    gen_unit_disk,
)


class TestErdosRenyi:
    """Test cases for gen_erdos_renyi."""

    def test_complete_probability(self):
        """Test p_edge = 1 gives a triangle on three vertices."""
        g = gen_erdos_renyi(3, 1.0, seed=7)

        assert g.edges == ((0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0))
        assert g.kind is GraphKind.ERDOS_RENYI

    def test_empty_probability(self):
        """Test p_edge = 0 gives no edges."""
        assert gen_erdos_renyi(6, 0.0, seed=1).num_edges == 0

    def test_determinism(self):
        """Test a fixed seed reproduces the edge set."""
        first = gen_erdos_renyi(20, 0.5, weighted=True, seed=11)
        second = gen_erdos_renyi(20, 0.5, weighted=True, seed=11)

        assert first.edges == second.edges

    def test_weight_range(self):
        """Test weighted edges fall in w_range."""
        g = gen_erdos_renyi(10, 1.0, weighted=True, w_range=(-2.0, 3.0), seed=3)

        assert g.num_edges == 45
        assert all(-2.0 <= w <= 3.0 for _, _, w in g.edges)

    def test_invalid_arguments(self):
        """Test argument validation."""
        with pytest.raises(ValidationError, match="at least 2 vertices"):
            gen_erdos_renyi(1, 0.5)
        with pytest.raises(ValidationError, match="p_edge must be in"):
            gen_erdos_renyi(4, 1.5)


class TestUnitDisk:
    """Test cases for gen_unit_disk."""

    def test_close_pair(self):
        """Test two vertices inside the radius share an edge and weight 11."""
        g = gen_unit_disk(2, radius=2.0, seed=0)

        assert g.edges == ((0, 1, 1.0),)
        assert g.vertex_weights == (11.0, 11.0)
        assert g.kind is GraphKind.UNIT_DISK

    def test_isolated_vertices(self):
        """Test an edgeless placement falls back to unit weights."""
        g = gen_unit_disk(5, radius=1e-9, seed=4)

        assert g.num_edges == 0
        assert g.vertex_weights == (1.0,) * 5

    def test_weights_from_degree(self):
        """Test weights lie in [1, 11] with the maximum at the best-connected vertex."""
        g = gen_unit_disk(10, seed=5)
        weights = g.vertex_weights

        assert all(1.0 <= w <= 11.0 for w in weights)
        if g.num_edges:
            assert max(weights) == pytest.approx(11.0)

    def test_determinism(self):
        """Test a fixed seed reproduces adjacency and positions."""
        first = gen_unit_disk(10, seed=9)
        second = gen_unit_disk(10, seed=9)

        assert first.edges == second.edges
        assert first.positions == second.positions


class TestOtherGenerators:
    """Test cases for TSP, SAT and portfolio generators."""

    def test_tsp_complete(self):
        """Test TSP graphs are complete and symmetric."""
        g = gen_tsp(4, dist_range=(1.0, 2.0), seed=2)

        assert g.is_complete
        assert g.weight(0, 3) == g.weight(3, 0)
        assert all(1.0 <= w <= 2.0 for _, _, w in g.edges)

    def test_complete_graph_rejects_asymmetric(self):
        """Test the distance matrix must be symmetric."""
        with pytest.raises(ValidationError, match="symmetric"):
            complete_graph([[0.0, 1.0], [2.0, 0.0]])

    def test_maxksat_forced_variables(self):
        """Test n = k forces every clause onto all variables."""
        inst = gen_maxksat(3, 3, 2.0, seed=1)

        assert inst.m == 6
        assert all({lit.var for lit in clause} == {0, 1, 2} for clause in inst.clauses)

    def test_maxksat_clause_count(self):
        """Test m = floor(alpha n)."""
        assert gen_maxksat(5, 3, 1.0, seed=0).m == 5

    def test_maxksat_determinism(self):
        """Test a fixed seed reproduces the clause list."""
        assert gen_maxksat(6, 3, 4.27, seed=8).clauses == gen_maxksat(6, 3, 4.27, seed=8).clauses

    def test_maxksat_no_clauses(self):
        """Test alpha too small for any clause."""
        with pytest.raises(ValidationError, match="gives no clauses"):
            gen_maxksat(3, 2, 0.1)

    def test_portfolio(self):
        """Test portfolio dimensions and upper-triangle covariances."""
        inst = gen_portfolio(6, 3, lam=0.5, seed=4)

        assert inst.n == 6
        assert inst.k == 3
        assert len(inst.mu) == 6
        assert len(inst.sigma) == 15
        assert all(i < j for i, j, _ in inst.sigma)
