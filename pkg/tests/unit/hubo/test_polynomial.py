"""Unit tests for Polynomial."""

import numpy as np
import pytest

from samba_gqw.exceptions import DimensionMismatchError, ValidationError
from samba_gqw.hubo import Polynomial, evaluate, poly_add, poly_mul, poly_scale
from samba_gqw.models import BitString
from samba_gqw.problems import labs_poly


class TestPolynomial:
    """Test cases for Polynomial construction and arithmetic."""

    @pytest.fixture
    def sample_poly(self):
        """2 x0 x1 - x0 + 3."""
        return Polynomial(2, {(0, 1): 2.0, (0,): -1.0, (): 3.0})

    def test_evaluate(self, sample_poly):
        """Test direct substitution."""
        assert evaluate(sample_poly, BitString.from_string("11")) == 4.0
        assert evaluate(sample_poly, BitString.from_string("10")) == 2.0

    def test_evaluate_zero_is_constant(self, sample_poly):
        """Test the all-zero decision returns the constant term."""
        assert evaluate(sample_poly, BitString.from_string("00")) == sample_poly.constant_term

    def test_evaluate_dimension_mismatch(self, sample_poly):
        """Test evaluating with the wrong number of bits."""
        with pytest.raises(DimensionMismatchError, match="decision has 3 variables"):
            evaluate(sample_poly, BitString.from_string("110"))

    def test_normalization(self):
        """Test repeated variables are reduced and duplicate monomials merged."""
        poly = Polynomial(3, [((1, 0), 1.0), ((0, 1), 2.0), ((2, 2), 4.0)])

        assert poly.terms == {(0, 1): 3.0, (2,): 4.0}
        assert poly.degree == 2
        assert len(poly) == 2

    def test_variable_out_of_range(self):
        """Test invalid variable indices are rejected."""
        with pytest.raises(ValidationError, match="out of range"):
            Polynomial(2, {(2,): 1.0})
        with pytest.raises(ValidationError, match="at least one variable"):
            Polynomial(0)

    def test_idempotent_product(self):
        """Test x0 * x0 reduces to x0."""
        x0 = Polynomial.variable(2, 0)
        assert poly_mul(x0, x0) == x0

    def test_complement_annihilation(self):
        """Test x0 (1 - x0) is the zero polynomial."""
        x0 = Polynomial.variable(2, 0)
        product = poly_mul(x0, 1 - x0)
        assert product.is_zero
        assert product.degree == 0

    def test_cancellation(self):
        """Test x0 x1 - x0 x1 cancels."""
        term = Polynomial(2, {(0, 1): 1.0})
        assert poly_add(term, poly_scale(term, -1.0)).is_zero

    def test_pointwise_arithmetic(self, sample_poly):
        """Test products and sums agree with pointwise evaluation."""
        other = Polynomial(2, {(1,): 1.5, (): -0.5})

        product = (sample_poly * other).evaluate_all()
        total = (sample_poly + other).evaluate_all()

        np.testing.assert_allclose(product, sample_poly.evaluate_all() * other.evaluate_all())
        np.testing.assert_allclose(total, sample_poly.evaluate_all() + other.evaluate_all())

    @staticmethod
    def _random_poly(rng, n):
        """Up to six monomials of degree <= 3 with integer-valued coefficients."""
        terms = {}
        for _ in range(int(rng.integers(0, 7))):
            degree = int(rng.integers(0, min(n, 3) + 1))
            subset = tuple(sorted(rng.choice(n, size=degree, replace=False).tolist()))
            terms[subset] = float(rng.integers(-5, 6))
        return Polynomial(n, terms)

    def test_random_add_mul_pointwise(self):
        """Test seeded random sums and products match evaluate on every decision."""
        rng = np.random.default_rng(17)

        for _ in range(20):
            n = int(rng.integers(1, 9))
            a, b = self._random_poly(rng, n), self._random_poly(rng, n)
            total, product = poly_add(a, b), poly_mul(a, b)

            for index in range(1 << n):
                x = BitString.from_int(index, n)
                assert evaluate(total, x) == pytest.approx(evaluate(a, x) + evaluate(b, x), abs=1e-9)
                assert evaluate(product, x) == pytest.approx(evaluate(a, x) * evaluate(b, x), abs=1e-9)

    def test_mismatched_sizes(self, sample_poly):
        """Test combining polynomials over different n."""
        with pytest.raises(DimensionMismatchError, match="cannot be combined"):
            sample_poly + Polynomial.variable(3, 0)

    def test_evaluate_all_bit_order(self):
        """Test index j encodes x_i as bit i."""
        poly = Polynomial(2, {(0,): 1.0, (1,): 2.0})
        np.testing.assert_array_equal(poly.evaluate_all(), [0.0, 1.0, 2.0, 3.0])

    def test_labs_hand_value(self):
        """Test the n=3 LABS polynomial at x = 001."""
        assert labs_poly(3).evaluate(BitString.from_string("001")) == pytest.approx(1.0)

    def test_json_roundtrip(self, sample_poly):
        """Test serialization is deterministic and lossless."""
        text = sample_poly.to_json()

        assert Polynomial.from_json(text) == sample_poly
        assert text == Polynomial.from_json(text).to_json()

    def test_malformed_json(self):
        """Test invalid payloads."""
        with pytest.raises(ValidationError, match="invalid polynomial JSON"):
            Polynomial.from_json("{not json")
        with pytest.raises(ValidationError, match="malformed polynomial data"):
            Polynomial.from_dict({"n": 2})
