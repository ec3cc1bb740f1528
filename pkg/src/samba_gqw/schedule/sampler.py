"""Offline sampling of descending energy gaps."""

import bisect
import logging
from dataclasses import dataclass, field

import numpy as np

from samba_gqw.exceptions import SamplingError
from samba_gqw.hubo import Polynomial
from samba_gqw.mixers import (
    MixerSpec,
    feasible_count,
    feasible_indices,
    is_feasible_index,
    neighbor_indices,
)
from samba_gqw.models import MixerKind
from samba_gqw.problems.models import SymmetryTag
from samba_gqw.schedule.models import SampledGaps

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
DEFAULT_PERMUTATION_LIMIT = 1 << 20


class CostOracle:
    """Vectorized C(j) lookups with a small memo."""

    def __init__(self, poly: Polynomial):
        self._masks, self._coeffs = poly.monomial_masks()
        self._cache: dict[int, float] = {}

    def __call__(self, index: int) -> float:
        cached = self._cache.get(index)
        if cached is None:
            hits = (index & self._masks) == self._masks
            cached = float(self._coeffs[hits].sum())
            self._cache[index] = cached
        return cached


@dataclass
class _EnergyTable:
    """Incremental means keyed by energy, merging keys within a relative tolerance."""
    tolerance: float
    keys: list[float] = field(default_factory=list)
    means: dict[float, float] = field(default_factory=dict)
    gap_counts: dict[float, int] = field(default_factory=dict)
    visit_counts: dict[float, int] = field(default_factory=dict)

    def key_for(self, energy: float) -> float:
        width = self.tolerance * max(1.0, abs(energy))
        position = bisect.bisect_left(self.keys, energy - width)
        if position < len(self.keys) and abs(self.keys[position] - energy) <= width:
            return self.keys[position]
        bisect.insort(self.keys, energy)
        return energy

    def visit(self, energy: float) -> float:
        key = self.key_for(energy)
        self.visit_counts[key] = self.visit_counts.get(key, 0) + 1
        return key

    def fold(self, key: float, gap: float) -> None:
        count = self.gap_counts.get(key, 0) + 1
        mean = self.means.get(key, 0.0)
        self.means[key] = mean + (gap - mean) / count
        self.gap_counts[key] = count


class _FeasibleDrawer:
    """Uniform draws of unvisited feasible states."""

    def __init__(self, spec: MixerSpec, rng: np.random.Generator, permutation_limit: int):
        self._spec = spec
        self._rng = rng
        self._count = feasible_count(spec)
        self._order: np.ndarray | None = None
        self._cursor = 0
        if self._count <= permutation_limit:
            self._order = rng.permutation(feasible_indices(spec))

    def draw(self, visited: set[int]) -> int | None:
        if len(visited) >= self._count:
            return None
        if self._order is not None:
            while self._cursor < self._order.shape[0]:
                candidate = int(self._order[self._cursor])
                self._cursor += 1
                if candidate not in visited:
                    return candidate
            return None
        while True:
            candidate = self._random_feasible()
            if candidate not in visited:
                return candidate

    def _random_feasible(self) -> int:
        n = self._spec.n
        if self._spec.kind is MixerKind.XY_RING:
            ones = self._rng.choice(n, size=self._spec.hamming_weight, replace=False)
            return int(sum(1 << int(i) for i in ones))
        return int(self._rng.integers(0, 1 << n))


def sample_gaps(
    poly: Polynomial,
    spec: MixerSpec,
    q: int,
    symmetry: SymmetryTag | None = None,
    seed: int = 0,
    tolerance: float = DEFAULT_TOLERANCE,
    permutation_limit: int = DEFAULT_PERMUTATION_LIMIT,
) -> SampledGaps:
    """Sample q feasible decisions and average their largest descending half-gaps.

    For each sampled x, the half-gaps (C(x) - C(y)) / |Delta^M| over neighbors y
    with C(y) < C(x) are computed; the maximum is folded into the running mean
    stored at energy C(x). Sampled decisions and their symmetry mates are never
    drawn again.

    Args:
        poly: Cost polynomial
        spec: Mixer defining neighbors and the feasible set
        q: Number of samples
        symmetry: Cost-preserving involutions used to skip equivalent decisions
        seed: Sampler seed
        tolerance: Relative tolerance for merging energies
        permutation_limit: Feasible-set size up to which draws use a shuffled list

    Returns:
        SampledGaps with q_used <= q

    Raises:
        SamplingError: If q < 1 or q exceeds the feasible-set size
    """
    if poly.n != spec.n:
        raise SamplingError(f"polynomial has {poly.n} variables, mixer has {spec.n}")
    total = feasible_count(spec)
    if q < 1:
        raise SamplingError("q must be at least 1")
    if q > total:
        raise SamplingError(f"q={q} exceeds the {total} feasible decisions")

    symmetry = symmetry or SymmetryTag.none()
    cost = CostOracle(poly)
    table = _EnergyTable(tolerance)
    drawer = _FeasibleDrawer(spec, np.random.default_rng(seed), permutation_limit)
    visited: set[int] = set()
    used = 0

    while used < q:
        x = drawer.draw(visited)
        if x is None:
            logger.warning("Feasible set exhausted after %d of %d samples", used, q)
            break
        used += 1
        visited.add(x)
        for mate in symmetry.mates(x):
            if is_feasible_index(spec, mate):
                visited.add(mate)

        energy = cost(x)
        key = table.visit(energy)
        floor = tolerance * max(1.0, abs(energy))
        drops = [energy - cost(y) for y in neighbor_indices(spec, x)]
        descending = [d for d in drops if d > floor]
        if descending:
            table.fold(key, max(descending) / spec.mixer_gap)

    logger.info(
        "Sampled %d states: %d energies with descending gaps", used, len(table.means)
    )
    return SampledGaps(
        entries=dict(table.means),
        gap_counts=dict(table.gap_counts),
        visit_counts=dict(table.visit_counts),
        q_used=used,
        q_requested=q,
        exact=used >= total or len(visited) >= total,
    )
