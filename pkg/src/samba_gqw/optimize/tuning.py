"""Baseline tuning: Bezier hopping rates and QAOA angles."""

import logging
import math
from collections.abc import Sequence

import numpy as np

from samba_gqw.engine import evolve_layer_plan, qaoa_evolve
from samba_gqw.exceptions import OptimizationError
from samba_gqw.metrics import approx_ratio_tilde
from samba_gqw.models import ObjectiveKind
from samba_gqw.optimize.models import OptResult
from samba_gqw.optimize.nelder_mead import nelder_mead
from samba_gqw.problems import PreparedProblem
from samba_gqw.schedule import BezierSchedule, discretize_rate

logger = logging.getLogger(__name__)

BEZIER_DIM = 6
BEZIER_BOUNDS = ((0.0, 1.0),) * BEZIER_DIM
DEFAULT_BEZIER_X0 = (0.5,) * BEZIER_DIM


def gqw_score(
    problem: PreparedProblem,
    theta: Sequence[float],
    total_time: float,
    layers: int,
    objective_kind: ObjectiveKind = ObjectiveKind.QUALITY,
    inner_trotter: int = 4,
) -> float:
    """Final quality (or P0) of the Bezier walk with parameters ``theta``."""
    plan = discretize_rate(BezierSchedule(tuple(float(v) for v in theta), total_time), layers)
    trace = evolve_layer_plan(
        problem.initial,
        plan,
        problem.spectrum,
        problem.mixer,
        snapshot_every=0,
        maximize=problem.maximize,
        inner_trotter=inner_trotter,
    )
    final = trace.final
    return final.p0 if objective_kind is ObjectiveKind.P0 else final.quality


def tune_gqw(
    problem: PreparedProblem,
    total_time: float,
    layers: int,
    max_iter: int = 100,
    objective_kind: ObjectiveKind = ObjectiveKind.QUALITY,
    seed: int = 0,
    x0: Sequence[float] | None = None,
    inner_trotter: int = 4,
) -> OptResult:
    """Optimise the 6 Bezier parameters in [0, 1]^6 at a fixed evolution time.

    The objective minimised is minus the final quality or minus P0.
    """
    if total_time <= 0:
        raise OptimizationError("total_time must be positive")
    start = DEFAULT_BEZIER_X0 if x0 is None else tuple(float(v) for v in x0)
    objective_kind = ObjectiveKind(objective_kind)

    def objective(theta: np.ndarray) -> float:
        return -gqw_score(problem, theta, total_time, layers, objective_kind, inner_trotter)

    logger.info(
        "Tuning Bezier walk on %s: T=%g, layers=%d, objective=%s",
        problem.name, total_time, layers, objective_kind.value,
    )
    return nelder_mead(objective, start, BEZIER_BOUNDS, max_iter, seed=seed)


def qaoa_ratio(problem: PreparedProblem, angles: Sequence[float], inner_trotter: int = 4) -> float:
    """r~ of the QAOA state prepared with ``angles``."""
    state = qaoa_evolve(
        problem.initial,
        angles,
        problem.spectrum,
        problem.mixer,
        maximize=problem.maximize,
        inner_trotter=inner_trotter,
    )
    return approx_ratio_tilde(state, problem.spectrum)


def tune_qaoa(
    problem: PreparedProblem,
    p: int,
    max_iter: int = 3000,
    seed: int = 0,
    inner_trotter: int = 4,
) -> OptResult:
    """Optimise 2p QAOA angles drawn uniformly in [-pi, pi]; minimises -r~.

    Raises:
        OptimizationError: If p < 1
    """
    if p < 1:
        raise OptimizationError("QAOA depth p must be at least 1")
    rng = np.random.default_rng(seed)
    x0 = rng.uniform(-math.pi, math.pi, size=2 * p)
    bounds = ((-math.pi, math.pi),) * (2 * p)

    def objective(angles: np.ndarray) -> float:
        return -qaoa_ratio(problem, angles, inner_trotter)

    logger.info("Tuning QAOA on %s: p=%d, max_iter=%d", problem.name, p, max_iter)
    return nelder_mead(objective, x0, bounds, max_iter, seed=seed)
