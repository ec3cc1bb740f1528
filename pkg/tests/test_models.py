"""Tests for shared models."""

import numpy as np
import pytest

from samba_gqw.exceptions import DimensionMismatchError, ValidationError
from samba_gqw.models import BitString, MixerKind, ProblemFamily, StateVector, derive_seed


class TestBitString:
    """Test cases for BitString."""

    def test_index_order(self):
        """Test x_0 is the least significant bit and renders first."""
        bits = BitString.from_int(1, 2)

        assert str(bits) == "10"
        assert BitString.from_string("10").to_int() == 1
        assert BitString.from_string("0011").to_int() == 12

    def test_weight_and_complement(self):
        """Test Hamming weight and global flip."""
        bits = BitString.from_string("0110")

        assert bits.weight == 2
        assert str(bits.complement()) == "1001"
        assert bits.n == 4

    def test_invalid(self):
        """Test validation."""
        with pytest.raises(ValidationError, match="invalid bit string"):
            BitString.from_string("012")
        with pytest.raises(ValidationError, match="out of range"):
            BitString.from_int(4, 2)
        with pytest.raises(ValidationError, match="length must be between"):
            BitString(())


class TestStateVector:
    """Test cases for StateVector."""

    def test_basis(self):
        """Test a basis state."""
        state = StateVector.basis(2, 2)

        assert state.dimension == 4
        np.testing.assert_array_equal(state.probabilities, [0.0, 0.0, 1.0, 0.0])
        assert state.norm == 1.0

    def test_fidelity(self):
        """Test overlap of |+> with |0>."""
        plus = StateVector.from_amplitudes(np.array([1.0, 1.0]) / np.sqrt(2))

        assert plus.fidelity(StateVector.basis(0, 1)) == pytest.approx(0.5)
        with pytest.raises(DimensionMismatchError):
            plus.fidelity(StateVector.basis(0, 2))

    def test_invalid_shapes(self):
        """Test non-power-of-two and mismatched arrays."""
        with pytest.raises(DimensionMismatchError, match="not a power of two"):
            StateVector.from_amplitudes(np.ones(3))
        with pytest.raises(DimensionMismatchError):
            StateVector(np.ones(4, dtype=complex), 3)


class TestEnums:
    """Test cases for string enums."""

    def test_values(self):
        """Test enum lookups by value."""
        assert ProblemFamily("maxksat") is ProblemFamily.MAXKSAT
        assert MixerKind("xy_ring") is MixerKind.XY_RING


class TestDeriveSeed:
    """Test cases for derive_seed."""

    def test_deterministic_and_distinct(self):
        """Test the same inputs agree and subsystems differ."""
        assert derive_seed(3, "sampler") == derive_seed(3, "sampler")
        assert derive_seed(3, "sampler") != derive_seed(3, "shots")
        assert derive_seed(3, "sampler") != derive_seed(4, "sampler")
