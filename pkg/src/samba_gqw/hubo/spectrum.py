"""Exact cost spectra and ranking structure for small n."""

import logging
from dataclasses import dataclass

import numpy as np

from samba_gqw.exceptions import DimensionMismatchError, QubitLimitError, ValidationError
from samba_gqw.hubo.polynomial import Polynomial

logger = logging.getLogger(__name__)

DEFAULT_MAX_QUBITS = 14
DEFAULT_RANK_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Costs of every basis state with their dense rankings.

    When ``feasible`` is set, c_min, c_max and the rankings refer to the
    feasible states only and infeasible states carry rank -1.
    """
    costs: np.ndarray
    c_min: float
    c_max: float
    levels: np.ndarray
    ranking_of: np.ndarray
    feasible: np.ndarray | None = None
    tolerance: float = DEFAULT_RANK_TOLERANCE

    @property
    def n(self) -> int:
        """Number of variables."""
        return int(self.costs.shape[0]).bit_length() - 1

    @property
    def num_rankings(self) -> int:
        """R, the number of distinct cost values."""
        return int(self.levels.shape[0])

    @property
    def rankings(self) -> dict[float, int]:
        """Map from distinct cost value to rank (0 = minimum)."""
        return {float(value): rank for rank, value in enumerate(self.levels)}

    @property
    def is_constant(self) -> bool:
        """True when every (feasible) state shares one cost."""
        return self.num_rankings == 1

    @property
    def feasible_mask(self) -> np.ndarray:
        """Boolean mask of states that carry a rank."""
        if self.feasible is None:
            return np.ones(self.costs.shape[0], dtype=bool)
        return self.feasible

    def states_with_rank(self, rank: int) -> np.ndarray:
        """Basis indices whose cost has the given rank."""
        return np.flatnonzero(self.ranking_of == rank)

    def rank_of_value(self, value: float) -> int | None:
        """Rank of a cost value within tolerance, or None if absent."""
        width = self.tolerance * max(1.0, abs(self.c_min), abs(self.c_max))
        position = int(np.argmin(np.abs(self.levels - value)))
        if abs(self.levels[position] - value) <= width:
            return position
        return None


def _dense_ranks(values: np.ndarray, tolerance: float) -> tuple[np.ndarray, np.ndarray]:
    """Dense ranks of ``values`` grouping neighbours closer than the tolerance."""
    order = np.argsort(values, kind="stable")
    ordered = values[order]
    scale = max(1.0, float(np.max(np.abs(ordered))))
    breaks = np.diff(ordered) > tolerance * scale
    sorted_ranks = np.concatenate(([0], np.cumsum(breaks)))
    ranks = np.empty_like(sorted_ranks)
    ranks[order] = sorted_ranks
    first_of_rank = np.concatenate(([True], breaks))
    return ranks, ordered[first_of_rank]


def enumerate_spectrum(
    poly: Polynomial,
    feasible_mask: np.ndarray | None = None,
    tolerance: float = DEFAULT_RANK_TOLERANCE,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> Spectrum:
    """Evaluate ``poly`` on all 2^n states and rank the distinct costs.

    Args:
        poly: Cost polynomial
        feasible_mask: Optional boolean mask restricting extremes and rankings
        tolerance: Relative tolerance for grouping equal costs
        max_qubits: Hard cap on n

    Returns:
        Spectrum over every basis state

    Raises:
        QubitLimitError: If poly.n exceeds max_qubits
        ValidationError: If the mask is empty or mis-sized
    """
    if poly.n > max_qubits:
        raise QubitLimitError(
            f"full spectrum needs 2^{poly.n} states; cap is {max_qubits} qubits",
            n=poly.n,
            cap=max_qubits,
        )

    costs = poly.evaluate_all()
    if feasible_mask is None:
        ranks, levels = _dense_ranks(costs, tolerance)
        mask = None
    else:
        mask = np.asarray(feasible_mask, dtype=bool)
        if mask.shape != costs.shape:
            raise DimensionMismatchError(
                f"feasible mask has shape {mask.shape}, expected {costs.shape}"
            )
        if not mask.any():
            raise ValidationError("feasible mask selects no states")
        feasible_ranks, levels = _dense_ranks(costs[mask], tolerance)
        ranks = np.full(costs.shape, -1, dtype=np.int64)
        ranks[mask] = feasible_ranks

    selected = costs if mask is None else costs[mask]
    spectrum = Spectrum(
        costs=costs,
        c_min=float(selected.min()),
        c_max=float(selected.max()),
        levels=levels,
        ranking_of=ranks,
        feasible=mask,
        tolerance=tolerance,
    )
    logger.debug(
        "Spectrum for n=%d: c_min=%g c_max=%g R=%d",
        poly.n, spectrum.c_min, spectrum.c_max, spectrum.num_rankings,
    )
    return spectrum
