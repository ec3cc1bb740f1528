"""Structured application of cost-phase and mixer layers."""

import math
from functools import lru_cache

import numpy as np

from samba_gqw.exceptions import DimensionMismatchError, EvolutionError
from samba_gqw.hubo import Spectrum
from samba_gqw.mixers import MixerSpec, ring_bonds
from samba_gqw.models import MixerKind, StateVector


def apply_cost_phase(state: StateVector, costs: Spectrum, dt: float) -> StateVector:
    """a_j <- a_j exp(-i dt C(j))."""
    if costs.costs.shape[0] != state.dimension:
        raise DimensionMismatchError(
            f"spectrum has {costs.costs.shape[0]} entries, state has {state.dimension}"
        )
    return StateVector(state.amplitudes * np.exp(-1j * dt * costs.costs), state.n)


def apply_x_mixer_layer(state: StateVector, theta: float) -> StateVector:
    """R_X(theta) on every qubit, R_X(theta) = [[cos theta/2, -i sin theta/2], [-i sin, cos]]."""
    c = math.cos(theta / 2.0)
    s = -1j * math.sin(theta / 2.0)
    amplitudes = state.amplitudes.copy()
    n = state.n
    for qubit in range(n):
        view = amplitudes.reshape(1 << (n - 1 - qubit), 2, 1 << qubit)
        low = view[:, 0, :].copy()
        high = view[:, 1, :]
        view[:, 0, :] = c * low + s * high
        view[:, 1, :] = s * low + c * high
    return StateVector(amplitudes, n)


@lru_cache(maxsize=256)
def _bond_pairs(n: int, i: int, j: int) -> tuple[np.ndarray, np.ndarray]:
    """Indices with (x_i, x_j) = (0, 1) and their (1, 0) partners."""
    indices = np.arange(1 << n, dtype=np.int64)
    source = indices[(((indices >> i) & 1) == 0) & (((indices >> j) & 1) == 1)]
    return source, source ^ ((1 << i) | (1 << j))


@lru_cache(maxsize=64)
def bond_groups(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Ring bonds split into mutually disjoint groups (even, odd, and the wrap bond for odd n)."""
    bonds = ring_bonds(n)
    even = tuple(b for b in bonds if b[0] % 2 == 0 and b[1] != 0)
    odd = tuple(b for b in bonds if b[0] % 2 == 1 and b[1] != 0)
    wrap = tuple(b for b in bonds if b[1] == 0)
    if n % 2 == 0:
        return tuple(g for g in (even, odd + wrap) if g)
    return tuple(g for g in (even, odd, wrap) if g)


def _apply_bond(amplitudes: np.ndarray, n: int, bond: tuple[int, int], phi: float) -> None:
    """exp(-i phi h) with h = -(|01><10| + |10><01|) on one bond, in place."""
    source, partner = _bond_pairs(n, *bond)
    c = math.cos(phi)
    s = 1j * math.sin(phi)
    a = amplitudes[source]
    b = amplitudes[partner]
    amplitudes[source] = c * a + s * b
    amplitudes[partner] = s * a + c * b


def apply_xy_ring_layer(state: StateVector, theta: float, inner_trotter: int = 4) -> StateVector:
    """Approximate exp(-i theta H_XY) on the ring with bond-group splitting.

    Args:
        state: Input state
        theta: Mixer angle dt * Gamma
        inner_trotter: Repetitions of the bond-group sweep

    Returns:
        Evolved state; the Hamming-weight support is preserved exactly
    """
    if state.n < 2:
        raise EvolutionError("ring mixer needs at least 2 qubits")
    if inner_trotter < 1:
        raise EvolutionError("inner_trotter must be at least 1")
    amplitudes = state.amplitudes.copy()
    phi = theta / inner_trotter
    groups = bond_groups(state.n)
    for _ in range(inner_trotter):
        for group in groups:
            for bond in group:
                _apply_bond(amplitudes, state.n, bond, phi)
    return StateVector(amplitudes, state.n)


def apply_mixer(
    state: StateVector,
    spec: MixerSpec,
    theta: float,
    maximize: bool = False,
    inner_trotter: int = 4,
) -> StateVector:
    """exp(-i theta H_M) for the mixer kind; maximization flips the sign."""
    if spec.n != state.n:
        raise DimensionMismatchError(f"mixer has {spec.n} qubits, state has {state.n}")
    sign = -1.0 if maximize else 1.0
    if spec.kind is MixerKind.X_HYPERCUBE:
        return apply_x_mixer_layer(state, -2.0 * sign * theta)
    return apply_xy_ring_layer(state, sign * theta, inner_trotter)
