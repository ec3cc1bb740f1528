"""Neighbor oracles, feasible sets and initial states for the mixers."""

import math
from functools import lru_cache

import numpy as np
from scipy import sparse

from samba_gqw.exceptions import DimensionMismatchError, ValidationError
from samba_gqw.mixers.models import MixerSpec
from samba_gqw.models import BitString, MixerKind, StateVector


@lru_cache(maxsize=64)
def ring_bonds(n: int) -> tuple[tuple[int, int], ...]:
    """Distinct bonds (i, i+1 mod n) of an n-site ring."""
    bonds: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    for i in range(n):
        pair = (i, (i + 1) % n)
        key = frozenset(pair)
        if len(key) == 2 and key not in seen:
            seen.add(key)
            bonds.append(pair)
    return tuple(bonds)


def popcounts(n: int) -> np.ndarray:
    """Hamming weight of every basis index in [0, 2^n)."""
    indices = np.arange(1 << n, dtype=np.int64)
    weights = np.zeros(1 << n, dtype=np.int64)
    for bit in range(n):
        weights += (indices >> bit) & 1
    return weights


def feasible_count(spec: MixerSpec) -> int:
    """Size of the feasible set: 2^n or C(n, k)."""
    if spec.kind is MixerKind.XY_RING:
        return math.comb(spec.n, spec.hamming_weight)
    return 1 << spec.n


def feasible_mask(spec: MixerSpec) -> np.ndarray:
    """Boolean mask over all 2^n basis states."""
    if spec.kind is MixerKind.XY_RING:
        return popcounts(spec.n) == spec.hamming_weight
    return np.ones(1 << spec.n, dtype=bool)


def feasible_indices(spec: MixerSpec) -> np.ndarray:
    """Basis indices of feasible states in increasing order."""
    return np.flatnonzero(feasible_mask(spec))


def is_feasible_index(spec: MixerSpec, index: int) -> bool:
    """Whether a basis index lies in the feasible set."""
    index = int(index)
    if spec.kind is MixerKind.XY_RING:
        return index.bit_count() == spec.hamming_weight
    return 0 <= index < (1 << spec.n)


def neighbor_indices(spec: MixerSpec, index: int) -> list[int]:
    """Integer form of :func:`neighbors`."""
    index = int(index)
    if spec.kind is MixerKind.X_HYPERCUBE:
        return [index ^ (1 << bit) for bit in range(spec.n)]

    if index.bit_count() != spec.hamming_weight:
        raise ValidationError(
            f"state has weight {index.bit_count()}, mixer expects {spec.hamming_weight}"
        )
    result: list[int] = []
    for i, j in ring_bonds(spec.n):
        if ((index >> i) & 1) != ((index >> j) & 1):
            swapped = index ^ ((1 << i) | (1 << j))
            if swapped not in result:
                result.append(swapped)
    return result


def neighbors(spec: MixerSpec, x: BitString) -> list[BitString]:
    """Decisions one mixer hop away from ``x``.

    Args:
        spec: Mixer specification
        x: Decision

    Returns:
        Single-bit flips for the hypercube, adjacent unequal-bit swaps for the ring

    Raises:
        DimensionMismatchError: If x.n differs from spec.n
        ValidationError: If x lies outside the ring's weight shell
    """
    if x.n != spec.n:
        raise DimensionMismatchError(f"decision has {x.n} bits, mixer has {spec.n}")
    return [BitString.from_int(j, spec.n) for j in neighbor_indices(spec, x.to_int())]


def initial_state(spec: MixerSpec) -> StateVector:
    """Uniform superposition over the feasible set."""
    mask = feasible_mask(spec)
    amplitudes = np.zeros(1 << spec.n, dtype=np.complex128)
    amplitudes[mask] = 1.0 / math.sqrt(feasible_count(spec))
    return StateVector(amplitudes, spec.n)


def mixer_matrix(spec: MixerSpec) -> np.ndarray:
    """Dense H_M: -sum_i X_i, or -sum_bonds(|01><10| + |10><01|) on the ring."""
    n = spec.n
    size = 1 << n
    indices = np.arange(size, dtype=np.int64)
    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []

    if spec.kind is MixerKind.X_HYPERCUBE:
        for bit in range(n):
            rows.append(indices)
            cols.append(indices ^ (1 << bit))
    else:
        for i, j in ring_bonds(n):
            differs = ((indices >> i) & 1) != ((indices >> j) & 1)
            source = indices[differs]
            rows.append(source)
            cols.append(source ^ ((1 << i) | (1 << j)))

    row = np.concatenate(rows)
    col = np.concatenate(cols)
    data = -np.ones(row.shape[0], dtype=np.float64)
    return sparse.coo_matrix((data, (row, col)), shape=(size, size)).toarray()
