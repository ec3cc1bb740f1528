"""Layer-by-layer evolution with metric snapshots."""

import logging
from dataclasses import dataclass, field

import numpy as np

from samba_gqw.engine.layers import apply_cost_phase, apply_mixer
from samba_gqw.exceptions import DimensionMismatchError, EvolutionError
from samba_gqw.hubo import Spectrum
from samba_gqw.metrics import DEFAULT_TOP_FRACTION, MetricBundle, compute_metrics
from samba_gqw.mixers import MixerSpec
from samba_gqw.models import BitString, StateVector
from samba_gqw.schedule import LayerPlan

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EvolutionTrace:
    """Metric snapshots along an evolution and the final state."""
    sample_times: tuple[float, ...]
    snapshots: tuple[MetricBundle, ...]
    final_state: StateVector

    @property
    def initial(self) -> MetricBundle:
        """Metrics of the initial state."""
        return self.snapshots[0]

    @property
    def final(self) -> MetricBundle:
        """Metrics of the final state."""
        return self.snapshots[-1]


@dataclass(frozen=True)
class ShotResult:
    """Multinomial measurement outcome and the best decision seen."""
    counts: dict[int, int] = field(default_factory=dict)
    best_index: int | None = None
    best_cost: float | None = None
    shots: int = 0

    def best_decision(self, n: int) -> BitString | None:
        """Best sampled decision as a bit string."""
        if self.best_index is None:
            return None
        return BitString.from_int(self.best_index, n)


def evolve_layer_plan(
    initial: StateVector,
    plan: LayerPlan,
    costs: Spectrum,
    spec: MixerSpec,
    snapshot_every: int = 1,
    maximize: bool = False,
    inner_trotter: int = 4,
    fraction: float = DEFAULT_TOP_FRACTION,
) -> EvolutionTrace:
    """Apply cost phase then mixer for every layer, recording snapshots.

    Snapshots are taken before the first layer, after every ``snapshot_every``
    layers and always after the last layer; 0 keeps only the two endpoints.

    Args:
        initial: Starting state
        plan: Layer plan
        costs: Exact spectrum (diagonal of H_C)
        spec: Mixer specification
        snapshot_every: Layer interval between snapshots
        maximize: Flip the mixer sign
        inner_trotter: Bond sweeps per ring-mixer layer
        fraction: Fraction of rankings counted as "top"

    Returns:
        EvolutionTrace whose last sample time is the plan's total time
    """
    if spec.n != initial.n or costs.costs.shape[0] != initial.dimension:
        raise DimensionMismatchError("state, mixer and spectrum disagree on n")
    if snapshot_every < 0:
        raise EvolutionError("snapshot_every must be non-negative")

    state = initial
    elapsed = 0.0
    times = [0.0]
    snapshots = [compute_metrics(state, costs, t=0.0, fraction=fraction)]
    last = plan.total_layers - 1

    for index, layer in enumerate(plan.layers):
        state = apply_cost_phase(state, costs, layer.dt)
        state = apply_mixer(state, spec, layer.theta, maximize=maximize, inner_trotter=inner_trotter)
        elapsed += layer.dt
        if index == last or (snapshot_every and (index + 1) % snapshot_every == 0):
            times.append(elapsed)
            snapshots.append(compute_metrics(state, costs, t=elapsed, fraction=fraction))

    final = snapshots[-1]
    logger.info(
        "Evolved %d layers to T=%g: quality=%.4f PR=%.4g P0=%.4f",
        plan.total_layers, elapsed, final.quality, final.participation_ratio, final.p0,
    )
    return EvolutionTrace(tuple(times), tuple(snapshots), state)


def sample_counts(state: StateVector, shots: int, seed: int = 0) -> dict[int, int]:
    """Multinomial measurement counts keyed by basis index."""
    if shots < 1:
        raise EvolutionError("shots must be at least 1")
    probs = state.probabilities
    probs = probs / probs.sum()
    draws = np.random.default_rng(seed).multinomial(shots, probs)
    return {int(j): int(draws[j]) for j in np.flatnonzero(draws)}


def best_sampled(counts: dict[int, int], costs: Spectrum) -> ShotResult:
    """Keep the lowest-cost feasible decision among the measured ones."""
    feasible = costs.feasible_mask
    candidates = [j for j in counts if feasible[j]]
    if not candidates:
        return ShotResult(counts=dict(counts), shots=sum(counts.values()))
    best = min(candidates, key=lambda j: (costs.costs[j], j))
    return ShotResult(
        counts=dict(counts),
        best_index=best,
        best_cost=float(costs.costs[best]),
        shots=sum(counts.values()),
    )
