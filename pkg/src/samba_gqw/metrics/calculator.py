"""Distribution metrics computed from a state and an exact spectrum."""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from samba_gqw.exceptions import DegenerateSpectrumError, DimensionMismatchError, ValidationError
from samba_gqw.hubo import Spectrum
from samba_gqw.models import StateVector

logger = logging.getLogger(__name__)

DEFAULT_DISPLAY_THRESHOLD = 1e-3
DEFAULT_TOP_FRACTION = 0.05


@dataclass(frozen=True)
class MetricBundle:
    """Snapshot of the measurement distribution at time t."""
    quality: float
    participation_ratio: float
    ranking_probs: dict[int, float] = field(default_factory=dict)
    top_fraction_prob: float = 0.0
    t: float = 0.0
    infeasible_probability: float = 0.0

    @property
    def p0(self) -> float:
        """Probability of the optimal ranking."""
        return self.ranking_probs.get(0, 0.0)


def _check(state: StateVector, spectrum: Spectrum) -> np.ndarray:
    if state.dimension != spectrum.costs.shape[0]:
        raise DimensionMismatchError(
            f"state has {state.dimension} amplitudes, spectrum has {spectrum.costs.shape[0]}"
        )
    return state.probabilities


def quality_expectation(
    state: StateVector,
    spectrum: Spectrum,
    feasible_mask: np.ndarray | None = None,
) -> float:
    """E[q(x)] with q(x) = (C_max - C(x)) / (C_max - C_min), zero on infeasible x."""
    probs = _check(state, spectrum)
    mask = spectrum.feasible_mask if feasible_mask is None else np.asarray(feasible_mask, bool)
    if spectrum.is_constant:
        return float(probs[mask].sum())
    quality = (spectrum.c_max - spectrum.costs) / (spectrum.c_max - spectrum.c_min)
    return float(np.dot(probs[mask], quality[mask]))


def participation_ratio(state: StateVector) -> float:
    """(2^n sum_x p(x)^2)^-1."""
    probs = state.probabilities
    return float(1.0 / (state.dimension * np.dot(probs, probs)))


def ranking_probabilities(
    state: StateVector,
    spectrum: Spectrum,
    threshold: float | None = None,
) -> dict[int, float]:
    """Probability mass per rank; with a threshold, ranks below it are dropped for display."""
    probs = _check(state, spectrum)
    ranked = spectrum.ranking_of >= 0
    totals = np.bincount(
        spectrum.ranking_of[ranked], weights=probs[ranked], minlength=spectrum.num_rankings
    )
    result = {rank: float(p) for rank, p in enumerate(totals)}
    if threshold is not None:
        result = {rank: p for rank, p in result.items() if p > threshold}
    return result


def top_rank_count(spectrum: Spectrum, fraction: float) -> int:
    """ceil(fraction * R), at least 1."""
    if not 0.0 < fraction <= 1.0:
        raise ValidationError("fraction must be in (0, 1]")
    return max(1, math.ceil(fraction * spectrum.num_rankings - 1e-12))


def top_fraction_probability(
    state: StateVector,
    spectrum: Spectrum,
    fraction: float = DEFAULT_TOP_FRACTION,
) -> float:
    """Cumulative probability of ranks 0 .. ceil(fraction * R) - 1."""
    cutoff = top_rank_count(spectrum, fraction)
    probs = ranking_probabilities(state, spectrum)
    return float(sum(probs[rank] for rank in range(cutoff)))


def expected_cost(state: StateVector, spectrum: Spectrum) -> float:
    """F(psi) = sum_x p(x) C(x)."""
    probs = _check(state, spectrum)
    return float(np.dot(probs, spectrum.costs))


def approx_ratio_tilde(state: StateVector, spectrum: Spectrum) -> float:
    """(C_max - F(psi)) / (C_max - C_min).

    Raises:
        DegenerateSpectrumError: If C_max == C_min
    """
    if spectrum.is_constant:
        raise DegenerateSpectrumError("approximation ratio needs C_max > C_min")
    return (spectrum.c_max - expected_cost(state, spectrum)) / (spectrum.c_max - spectrum.c_min)


def compute_metrics(
    state: StateVector,
    spectrum: Spectrum,
    t: float = 0.0,
    fraction: float = DEFAULT_TOP_FRACTION,
    tracked_ranks: int | None = None,
) -> MetricBundle:
    """All metrics of one snapshot.

    With ``tracked_ranks`` only ranks 0 .. tracked_ranks - 1 are kept in
    ``ranking_probs``; the top-fraction probability always uses every rank.
    """
    probs = _check(state, spectrum)
    ranking = ranking_probabilities(state, spectrum)
    cutoff = top_rank_count(spectrum, fraction)
    top = float(sum(ranking[r] for r in range(cutoff)))
    if tracked_ranks is not None:
        ranking = {r: p for r, p in ranking.items() if r < tracked_ranks}
    infeasible = float(probs[~spectrum.feasible_mask].sum())
    return MetricBundle(
        quality=quality_expectation(state, spectrum),
        participation_ratio=participation_ratio(state),
        ranking_probs=ranking,
        top_fraction_prob=top,
        t=t,
        infeasible_probability=infeasible,
    )
