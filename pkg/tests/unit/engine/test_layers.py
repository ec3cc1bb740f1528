"""Unit tests for the cost-phase and mixer kernels."""

import math

import numpy as np
import pytest
from scipy.linalg import expm

from samba_gqw.engine import (
    apply_cost_phase,
    apply_mixer,
    apply_x_mixer_layer,
    apply_xy_ring_layer,
    bond_groups,
)
from samba_gqw.exceptions import DimensionMismatchError, EvolutionError
from samba_gqw.hubo import Polynomial, enumerate_spectrum
from samba_gqw.mixers import MixerSpec, feasible_mask, initial_state, mixer_matrix, ring_bonds
from samba_gqw.models import StateVector


def _random_state(n, seed, mask=None):
    rng = np.random.default_rng(seed)
    amplitudes = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    if mask is not None:
        amplitudes[~mask] = 0.0
    return StateVector(amplitudes / np.linalg.norm(amplitudes), n)


class TestCostPhase:
    """Test cases for apply_cost_phase."""

    def test_zero_time_identity(self):
        """Test dt = 0 leaves the state unchanged."""
        state = _random_state(3, 1)
        spectrum = enumerate_spectrum(Polynomial(3, {(0, 2): 1.5, (1,): -2.0}))

        result = apply_cost_phase(state, spectrum, 0.0)
        np.testing.assert_allclose(result.amplitudes, state.amplitudes)

    def test_constant_cost_global_phase(self):
        """Test a constant cost only adds a global phase."""
        state = _random_state(2, 2)
        spectrum = enumerate_spectrum(Polynomial.constant(2, 3.0))

        result = apply_cost_phase(state, spectrum, 0.7)

        np.testing.assert_allclose(result.amplitudes, state.amplitudes * np.exp(-2.1j))
        np.testing.assert_allclose(result.probabilities, state.probabilities)

    def test_phase_flip(self):
        """Test |+> becomes |-> under costs (0, 1) for dt = pi."""
        spectrum = enumerate_spectrum(Polynomial.variable(1, 0))
        plus = initial_state(MixerSpec.hypercube(1))

        result = apply_cost_phase(plus, spectrum, math.pi)

        np.testing.assert_allclose(result.amplitudes, np.array([1, -1]) / math.sqrt(2), atol=1e-12)

    def test_dimension_mismatch(self):
        """Test spectrum and state sizes must agree."""
        spectrum = enumerate_spectrum(Polynomial.variable(2, 0))
        with pytest.raises(DimensionMismatchError):
            apply_cost_phase(StateVector.basis(0, 3), spectrum, 0.1)


class TestXMixer:
    """Test cases for apply_x_mixer_layer."""

    def test_zero_angle_identity(self):
        """Test theta = 0 leaves the state unchanged."""
        state = _random_state(3, 3)
        np.testing.assert_allclose(apply_x_mixer_layer(state, 0.0).amplitudes, state.amplitudes)

    def test_pi_rotation(self):
        """Test R_X(pi)|0> = -i|1>."""
        result = apply_x_mixer_layer(StateVector.basis(0, 1), math.pi)
        np.testing.assert_allclose(result.amplitudes, [0.0, -1j], atol=1e-12)

    def test_matches_dense_exponential(self):
        """Test apply_mixer equals expm(-i theta H_M) for the hypercube."""
        spec = MixerSpec.hypercube(3)
        state = _random_state(3, 4)
        theta = 0.37

        expected = expm(-1j * theta * mixer_matrix(spec)) @ state.amplitudes
        result = apply_mixer(state, spec, theta)

        np.testing.assert_allclose(result.amplitudes, expected, atol=1e-12)

    def test_maximize_flips_sign(self):
        """Test maximization evolves under -H_M."""
        spec = MixerSpec.hypercube(2)
        state = _random_state(2, 5)

        expected = expm(1j * 0.4 * mixer_matrix(spec)) @ state.amplitudes
        result = apply_mixer(state, spec, 0.4, maximize=True)

        np.testing.assert_allclose(result.amplitudes, expected, atol=1e-12)

    def test_norm_preserved(self):
        """Test unitarity over many random layers."""
        rng = np.random.default_rng(6)
        state = _random_state(4, 6)
        for theta in rng.uniform(-math.pi, math.pi, size=2000):
            state = apply_x_mixer_layer(state, float(theta))
        assert state.norm == pytest.approx(1.0, abs=1e-12)


class TestXYRing:
    """Test cases for apply_xy_ring_layer."""

    def test_zero_angle_identity(self):
        """Test theta = 0 leaves the state unchanged."""
        state = _random_state(4, 7)
        np.testing.assert_allclose(apply_xy_ring_layer(state, 0.0).amplitudes, state.amplitudes)

    @pytest.mark.parametrize("inner_trotter", [1, 3])
    def test_single_bond(self, inner_trotter):
        """Test |01> -> cos(phi)|01> + i sin(phi)|10> on one bond."""
        phi = 0.6
        start = StateVector.basis(0b10, 2)

        result = apply_xy_ring_layer(start, phi, inner_trotter=inner_trotter)

        expected = np.zeros(4, dtype=complex)
        expected[0b10] = math.cos(phi)
        expected[0b01] = 1j * math.sin(phi)
        np.testing.assert_allclose(result.amplitudes, expected, atol=1e-12)

    def test_weight_subspace_preserved(self):
        """Test amplitudes outside the weight shell stay exactly zero."""
        spec = MixerSpec.ring(5, 2)
        mask = feasible_mask(spec)
        state = _random_state(5, 8, mask)
        for _ in range(50):
            state = apply_mixer(state, spec, 0.31)

        assert np.all(state.amplitudes[~mask] == 0)
        assert state.norm == pytest.approx(1.0, abs=1e-12)

    def test_trotter_convergence(self):
        """Test the error shrinks toward the dense exponential as inner_trotter grows."""
        spec = MixerSpec.ring(4, 2)
        state = _random_state(4, 9, feasible_mask(spec))
        theta = 0.8
        exact = expm(-1j * theta * mixer_matrix(spec)) @ state.amplitudes

        errors = [
            np.linalg.norm(apply_xy_ring_layer(state, theta, inner_trotter=m).amplitudes - exact)
            for m in (1, 4, 16)
        ]

        assert errors[1] > errors[2]
        assert errors[2] < errors[0] / 4

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_bond_groups_partition(self, n):
        """Test bond groups cover every bond once and are internally disjoint."""
        groups = bond_groups(n)
        flat = [bond for group in groups for bond in group]

        assert sorted(flat) == sorted(ring_bonds(n))
        for group in groups:
            sites = [site for bond in group for site in bond]
            assert len(sites) == len(set(sites))

    def test_invalid_arguments(self):
        """Test argument validation."""
        with pytest.raises(EvolutionError, match="inner_trotter"):
            apply_xy_ring_layer(StateVector.basis(1, 2), 0.1, inner_trotter=0)
        with pytest.raises(EvolutionError, match="at least 2 qubits"):
            apply_xy_ring_layer(StateVector.basis(1, 1), 0.1)
        with pytest.raises(DimensionMismatchError):
            apply_mixer(StateVector.basis(1, 3), MixerSpec.ring(4, 2), 0.1)
