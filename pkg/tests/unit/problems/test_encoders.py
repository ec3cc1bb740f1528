"""Unit tests for cost encodings, checked against direct formulas."""

import pytest

from samba_gqw.exceptions import ValidationError
from samba_gqw.models import BitString
from samba_gqw.problems import (
    GraphInstance,
    Literal,
    PortfolioInstance,
    SatInstance,
    default_mis_penalty,
    gen_erdos_renyi,
    gen_maxksat,
    gen_portfolio,
    gen_unit_disk,
    labs_poly,
    maxcut_poly,
    maxksat_poly,
    mis_poly,
    portfolio_poly,
)
from tests.oracles import (
    bits_of,
    labs_energy,
    maxcut_cost,
    maxksat_cost,
    mis_cost,
    portfolio_cost,
)


@pytest.fixture
def triangle():
    """Unit-weight triangle."""
    return GraphInstance(3, ((0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)))


@pytest.fixture
def path3():
    """Path 0-1-2 with unit weights."""
    return GraphInstance(3, ((0, 1, 1.0), (1, 2, 1.0)))


class TestMaxCut:
    """Test cases for maxcut_poly."""

    def test_triangle_values(self, triangle):
        """Test hand values on the triangle."""
        poly = maxcut_poly(triangle)

        assert poly.evaluate(BitString.from_string("010")) == -2.0
        assert poly.evaluate(BitString.from_string("000")) == 0.0
        assert poly.evaluate_all().min() == -2.0

    def test_matches_oracle(self):
        """Test every state of a weighted random graph."""
        g = gen_erdos_renyi(7, 0.6, weighted=True, seed=3)
        costs = maxcut_poly(g).evaluate_all()

        for j in range(1 << 7):
            assert costs[j] == pytest.approx(maxcut_cost(g, bits_of(j, 7)))

    def test_needs_edges(self):
        """Test edgeless graphs are rejected."""
        with pytest.raises(ValidationError, match="at least one edge"):
            maxcut_poly(GraphInstance(3, ()))


class TestMis:
    """Test cases for mis_poly."""

    def test_path_values(self, path3):
        """Test hand values on the path with penalty 3."""
        poly = mis_poly(path3, penalty=3.0)

        assert poly.evaluate(BitString.from_string("101")) == -2.0
        assert poly.evaluate(BitString.from_string("111")) == 3.0

    def test_path_unique_optimum(self, path3):
        """Test 101 is the only state at the minimum."""
        costs = mis_poly(path3, penalty=3.0).evaluate_all()

        optimal = [j for j in range(8) if costs[j] == costs.min()]
        assert optimal == [BitString.from_string("101").to_int()]

    def test_default_penalty(self, path3):
        """Test the default penalty exceeds the heaviest edge's endpoint weights."""
        assert default_mis_penalty(path3) == 3.0
        assert default_mis_penalty(GraphInstance(2, ())) == 1.0

    def test_matches_oracle(self):
        """Test every state of a weighted unit-disk graph."""
        g = gen_unit_disk(8, seed=2)
        penalty = default_mis_penalty(g)
        costs = mis_poly(g).evaluate_all()

        for j in range(1 << 8):
            assert costs[j] == pytest.approx(mis_cost(g, bits_of(j, 8), penalty))


class TestPortfolio:
    """Test cases for portfolio_poly."""

    @pytest.fixture
    def pair(self):
        """Two assets with mu = (1, 2), sigma_01 = 4, lambda = 1/2."""
        return PortfolioInstance(2, (1.0, 2.0), ((0, 1, 4.0),), 0.5, 1)

    def test_hand_values(self, pair):
        """Test the four states of the two-asset instance."""
        poly = portfolio_poly(pair)

        assert poly.evaluate(BitString.from_string("11")) == -1.0
        assert poly.evaluate(BitString.from_string("00")) == 0.0
        assert poly.evaluate(BitString.from_string("01")) == -2.0

    def test_matches_oracle(self):
        """Test every state of a synthetic eight-asset instance."""
        inst = gen_portfolio(8, 4, seed=6)
        costs = portfolio_poly(inst).evaluate_all()

        for j in range(1 << 8):
            assert costs[j] == pytest.approx(portfolio_cost(inst, bits_of(j, 8)))

    def test_invalid_instance(self):
        """Test portfolio validation."""
        with pytest.raises(ValidationError, match="risk appetite"):
            PortfolioInstance(2, (1.0, 2.0), (), 0.0, 1)
        with pytest.raises(ValidationError, match="k must be between"):
            PortfolioInstance(2, (1.0, 2.0), (), 1.0, 3)


class TestLabs:
    """Test cases for labs_poly."""

    def test_two_sites_constant(self):
        """Test n = 2 collapses to the constant 1."""
        poly = labs_poly(2)

        assert poly.degree == 0
        assert poly.constant_term == 1.0

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_matches_oracle(self, n):
        """Test every state against the autocorrelation formula."""
        poly = labs_poly(n)
        costs = poly.evaluate_all()

        assert poly.degree <= 4
        for j in range(1 << n):
            assert costs[j] == pytest.approx(labs_energy(bits_of(j, n)))

    def test_too_short(self):
        """Test n < 2 is rejected."""
        with pytest.raises(ValidationError, match="n >= 2"):
            labs_poly(1)


class TestMaxKSat:
    """Test cases for maxksat_poly."""

    def test_single_clause(self):
        """Test a satisfied and an unsatisfied single clause at x = 00."""
        negated = SatInstance(2, 2, ((Literal(0), Literal(1, True)),))
        plain = SatInstance(2, 2, ((Literal(0), Literal(1)),))
        zero = BitString.from_string("00")

        assert maxksat_poly(negated).evaluate(zero) == -1.0
        assert maxksat_poly(plain).evaluate(zero) == 0.0

    def test_matches_oracle(self):
        """Test every state of a random 3-SAT instance."""
        inst = gen_maxksat(8, 3, 4.27, seed=5)
        costs = maxksat_poly(inst).evaluate_all()

        assert maxksat_poly(inst).degree <= 3
        for j in range(1 << 8):
            assert costs[j] == pytest.approx(maxksat_cost(inst, bits_of(j, 8)))

    def test_satisfiable_minimum(self):
        """Test c_min = -m when a satisfying assignment exists."""
        clauses = (
            (Literal(0), Literal(1), Literal(2)),
            (Literal(0, True), Literal(1), Literal(3)),
            (Literal(1, True), Literal(2, True), Literal(3)),
        )
        inst = SatInstance(4, 3, clauses)

        assert maxksat_poly(inst).evaluate_all().min() == -3.0

    def test_literal_signed_roundtrip(self):
        """Test DIMACS-style literal conversion."""
        assert Literal(2, True).to_signed() == -3
        assert Literal.from_signed(-3) == Literal(2, True)
        with pytest.raises(ValidationError, match="literal 0"):
            Literal.from_signed(0)
