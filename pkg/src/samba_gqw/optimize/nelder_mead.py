"""Bounded Nelder-Mead with a hard evaluation budget."""

import logging
from collections.abc import Callable, Sequence

import numpy as np
from scipy.optimize import minimize

from samba_gqw.exceptions import OptimizationError
from samba_gqw.optimize.models import OptResult

logger = logging.getLogger(__name__)

DEFAULT_STEP_FRACTION = 0.05
JITTER = 0.1
XATOL = 1e-6
FATOL = 1e-10


class _BudgetExhausted(Exception):
    """Internal signal raised when the objective budget runs out."""


class _CountedObjective:
    """Clip, evaluate, record history and enforce the call budget."""

    def __init__(self, objective: Callable[[np.ndarray], float], lower, upper, budget: int):
        self.objective = objective
        self.lower = lower
        self.upper = upper
        self.budget = budget
        self.history: list[tuple[tuple[float, ...], float]] = []

    def __call__(self, x: np.ndarray) -> float:
        if len(self.history) >= self.budget:
            raise _BudgetExhausted
        clipped = np.clip(np.asarray(x, dtype=float), self.lower, self.upper)
        value = float(self.objective(clipped))
        self.history.append((tuple(float(v) for v in clipped), value))
        return value

    def best(self) -> tuple[tuple[float, ...], float]:
        best_params, best_value = self.history[0]
        for params, value in self.history[1:]:
            if value < best_value:
                best_params, best_value = params, value
        return best_params, best_value


def initial_simplex(
    x0: np.ndarray,
    lower: np.ndarray,
    upper: np.ndarray,
    seed: int = 0,
    step_fraction: float = DEFAULT_STEP_FRACTION,
) -> np.ndarray:
    """x0 plus one jittered step per coordinate, flipped inward at the upper bound."""
    rng = np.random.default_rng(seed)
    dim = x0.shape[0]
    simplex = np.tile(x0, (dim + 1, 1))
    for i in range(dim):
        step = step_fraction * (upper[i] - lower[i]) * (1.0 + JITTER * rng.random())
        if x0[i] + step > upper[i]:
            step = -step
        simplex[i + 1, i] = np.clip(x0[i] + step, lower[i], upper[i])
    return simplex


def nelder_mead(
    objective: Callable[[np.ndarray], float],
    x0: Sequence[float],
    bounds: Sequence[tuple[float, float]],
    max_iter: int,
    seed: int = 0,
) -> OptResult:
    """Minimise ``objective`` inside a box.

    Every point is clipped into the box before it is evaluated. At most
    ``max_iter + dim + 1`` objective calls are made.

    Args:
        objective: Callable mapping a parameter vector to a real value
        x0: Starting point inside the bounds
        bounds: One (low, high) pair per coordinate
        max_iter: Simplex iteration budget
        seed: Seed for the initial simplex jitter

    Returns:
        OptResult with the best point seen and the full evaluation history

    Raises:
        OptimizationError: If the budget or the bounds are invalid
    """
    if max_iter <= 0:
        raise OptimizationError("max_iter must be positive")
    start = np.asarray(x0, dtype=float)
    box = np.asarray(bounds, dtype=float)
    if box.shape != (start.shape[0], 2):
        raise OptimizationError(
            f"expected {start.shape[0]} (low, high) bounds, got shape {box.shape}"
        )
    lower, upper = box[:, 0], box[:, 1]
    if not (np.all(np.isfinite(box)) and np.all(lower <= upper)):
        raise OptimizationError("bounds must be finite with low <= high")
    if np.any(start < lower) or np.any(start > upper):
        raise OptimizationError("x0 lies outside the bounds")

    dim = start.shape[0]
    counted = _CountedObjective(objective, lower, upper, max_iter + dim + 1)
    iterations = 0

    def _tick(_xk):
        nonlocal iterations
        iterations += 1

    exhausted = False
    try:
        result = minimize(
            counted,
            start,
            method="Nelder-Mead",
            bounds=list(zip(lower, upper, strict=True)),
            callback=_tick,
            options={
                "maxiter": max_iter,
                "initial_simplex": initial_simplex(start, lower, upper, seed),
                "xatol": XATOL,
                "fatol": FATOL,
            },
        )
        iterations = int(result.nit)
    except _BudgetExhausted:
        exhausted = True
        logger.warning("Nelder-Mead stopped after %d evaluations (budget exhausted)", counted.budget)
    except (ValueError, FloatingPointError) as e:
        raise OptimizationError(f"Nelder-Mead failed: {e}") from e

    best_params, best_value = counted.best()
    logger.info(
        "Nelder-Mead: best=%.6g after %d iterations, %d evaluations",
        best_value, iterations, len(counted.history),
    )
    return OptResult(
        best_params=best_params,
        best_value=best_value,
        iterations_used=iterations,
        history=counted.history,
        budget_exhausted=exhausted,
    )
