"""Schedule construction and discretization into layer plans."""

import logging
import math
from collections.abc import Sequence

import numpy as np

from samba_gqw.exceptions import QubitLimitError, ScheduleError
from samba_gqw.hubo import Polynomial
from samba_gqw.mixers import MixerSpec, feasible_indices, neighbor_indices
from samba_gqw.schedule.models import (
    TRANSFER_TIME,
    HoppingRate,
    Layer,
    LayerPlan,
    SampledGaps,
    Schedule,
)

logger = logging.getLogger(__name__)

DEFAULT_LEVEL_TOLERANCE = 1e-9
EXACT_TIME_MAX_QUBITS = 10


def build_schedule(gaps: SampledGaps, tolerance: float = DEFAULT_LEVEL_TOLERANCE) -> Schedule:
    """Sort mean gaps decreasing, merge duplicates and derive durations.

    Raises:
        ScheduleError: If no descending transition was sampled
    """
    if gaps.is_empty:
        raise ScheduleError("no descending transitions sampled")

    levels: list[float] = []
    for value in sorted(gaps.entries.values(), reverse=True):
        if levels and levels[-1] - value <= tolerance * max(1.0, abs(value)):
            continue
        levels.append(value)

    schedule = Schedule.from_levels(
        tuple(levels), q_used=gaps.q_used, q_requested=gaps.q_requested, exact=gaps.exact
    )
    logger.info(
        "Built schedule: %d levels, Gamma(0)=%g, T=%g",
        schedule.num_segments, levels[0], schedule.total_time,
    )
    return schedule


def gamma_at(sched: HoppingRate, t: float) -> float:
    """Hopping rate at time t."""
    return sched.gamma_at(t)


def gamma_of_energy(gaps: SampledGaps) -> list[tuple[float, float]]:
    """Energy-domain curve (E, Gamma(E)) sorted by decreasing energy."""
    return sorted(gaps.entries.items(), key=lambda item: item[0], reverse=True)


def exact_total_time(poly: Polynomial, spec: MixerSpec) -> float:
    """(pi / (2 sqrt 2)) * sum over mixer edges of 1 / delta_jk.

    Edges whose endpoints share a cost are skipped.
    """
    if poly.n > EXACT_TIME_MAX_QUBITS:
        raise QubitLimitError(
            f"exact T* enumerates all mixer edges; cap is {EXACT_TIME_MAX_QUBITS} qubits",
            n=poly.n,
            cap=EXACT_TIME_MAX_QUBITS,
        )
    costs = poly.evaluate_all()
    scale = max(1.0, float(np.max(np.abs(costs))))
    total = 0.0
    for j in feasible_indices(spec):
        for k in neighbor_indices(spec, int(j)):
            if k <= j:
                continue
            delta = abs(costs[j] - costs[k]) / spec.mixer_gap
            if delta > DEFAULT_LEVEL_TOLERANCE * scale:
                total += 1.0 / delta
    return TRANSFER_TIME * total


def proportional_slices(sched: Schedule, density: float) -> tuple[int, ...]:
    """p_l = max(1, ceil(density * tau_l))."""
    if density <= 0:
        raise ScheduleError("slice density must be positive")
    return tuple(max(1, math.ceil(density * tau)) for tau in sched.durations)


def _resolve_slices(sched: Schedule, slices: int | Sequence[int]) -> tuple[int, ...]:
    if isinstance(slices, int):
        counts = (slices,) * sched.num_segments
    else:
        counts = tuple(int(p) for p in slices)
    if len(counts) != sched.num_segments:
        raise ScheduleError(
            f"{len(counts)} slice counts given for {sched.num_segments} segments"
        )
    if any(p < 1 for p in counts):
        raise ScheduleError("every segment needs at least one slice")
    return counts


def discretize(
    sched: Schedule,
    slices: int | Sequence[int],
    averaging: str = "midpoint",
) -> LayerPlan:
    """Slice each segment into p_l layers.

    Args:
        sched: Piecewise-linear schedule
        slices: Uniform p or one p_l per segment
        averaging: "midpoint" gives Gamma_{l,r} = Gamma_l - (r + 1/2)(Gamma_l - Gamma_{l+1}) / p_l;
            "segment" gives every slice the segment average

    Returns:
        LayerPlan with sum_l p_l layers
    """
    if averaging not in ("midpoint", "segment"):
        raise ScheduleError(f"unknown averaging mode {averaging!r}")
    counts = _resolve_slices(sched, slices)
    gammas = sched.gammas

    layers: list[Layer] = []
    for segment, (tau, p) in enumerate(zip(sched.durations, counts, strict=True)):
        start, end = gammas[segment], gammas[segment + 1]
        dt = tau / p
        for r in range(p):
            if averaging == "midpoint":
                gamma = start - (r + 0.5) * (start - end) / p
            else:
                gamma = 0.5 * (start + end)
            layers.append(
                Layer(
                    dt=dt,
                    gamma=gamma,
                    segment=segment,
                    t_end=sched.node_times[segment] + (r + 1) * dt,
                )
            )

    plan = LayerPlan(tuple(layers), counts)
    logger.debug("Discretized %d segments into %d layers", len(counts), plan.total_layers)
    return plan


def discretize_rate(rate: HoppingRate, layers: int) -> LayerPlan:
    """Uniform slicing of any hopping rate, sampling Gamma at slice midpoints."""
    if layers < 1:
        raise ScheduleError("at least one layer is required")
    dt = rate.total_time / layers
    plan = tuple(
        Layer(dt=dt, gamma=rate.gamma_at((r + 0.5) * dt), t_end=(r + 1) * dt)
        for r in range(layers)
    )
    return LayerPlan(plan, (layers,))
