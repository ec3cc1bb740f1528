"""Unit tests for exact spectrum enumeration."""

import numpy as np
import pytest

from samba_gqw.exceptions import QubitLimitError, ValidationError
from samba_gqw.hubo import Polynomial, enumerate_spectrum
from samba_gqw.problems import GraphInstance, maxcut_poly


class TestEnumerateSpectrum:
    """Test cases for enumerate_spectrum."""

    @pytest.fixture
    def triangle_spectrum(self):
        """Unit-weight triangle MaxCut."""
        g = GraphInstance(3, ((0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)))
        return enumerate_spectrum(maxcut_poly(g))

    def test_single_variable(self):
        """Test poly = x0."""
        spectrum = enumerate_spectrum(Polynomial.variable(1, 0))

        np.testing.assert_array_equal(spectrum.costs, [0.0, 1.0])
        assert spectrum.c_min == 0.0
        assert spectrum.c_max == 1.0
        np.testing.assert_array_equal(spectrum.ranking_of, [0, 1])

    def test_triangle(self, triangle_spectrum):
        """Test triangle MaxCut has two levels with six optimal states."""
        assert triangle_spectrum.c_min == -2.0
        assert triangle_spectrum.num_rankings == 2
        np.testing.assert_array_equal(triangle_spectrum.levels, [-2.0, 0.0])
        assert len(triangle_spectrum.states_with_rank(0)) == 6
        assert triangle_spectrum.rankings == {-2.0: 0, 0.0: 1}

    def test_constant(self):
        """Test a constant polynomial has a single rank."""
        spectrum = enumerate_spectrum(Polynomial.constant(3, 5.0))

        assert spectrum.num_rankings == 1
        assert spectrum.is_constant
        assert set(spectrum.ranking_of.tolist()) == {0}

    def test_tolerance_groups_near_equal_costs(self):
        """Test costs within the relative tolerance share a rank."""
        poly = Polynomial(2, {(0,): 1.0, (1,): 1.0 + 1e-12})
        spectrum = enumerate_spectrum(poly)

        assert spectrum.num_rankings == 3
        assert spectrum.ranking_of[1] == spectrum.ranking_of[2]

    def test_feasible_mask(self):
        """Test rankings restricted to a feasible subset."""
        poly = Polynomial(2, {(0,): 1.0, (1,): 2.0})
        mask = np.array([False, True, True, False])

        spectrum = enumerate_spectrum(poly, feasible_mask=mask)

        assert spectrum.c_min == 1.0
        assert spectrum.c_max == 2.0
        np.testing.assert_array_equal(spectrum.ranking_of, [-1, 0, 1, -1])
        assert spectrum.rank_of_value(2.0) == 1
        assert spectrum.rank_of_value(0.0) is None

    def test_empty_mask(self):
        """Test an all-false mask is rejected."""
        with pytest.raises(ValidationError, match="selects no states"):
            enumerate_spectrum(Polynomial.variable(2, 0), feasible_mask=np.zeros(4, dtype=bool))

    def test_qubit_cap(self):
        """Test the error names the cap."""
        with pytest.raises(QubitLimitError, match="cap is 4 qubits") as info:
            enumerate_spectrum(Polynomial.variable(5, 0), max_qubits=4)
        assert info.value.cap == 4
        assert info.value.n == 5
