"""Derivative-free tuning of the Bezier-walk and QAOA baselines."""

from samba_gqw.optimize.models import OptResult
from samba_gqw.optimize.nelder_mead import initial_simplex, nelder_mead
from samba_gqw.optimize.tuning import (
    BEZIER_BOUNDS,
    DEFAULT_BEZIER_X0,
    gqw_score,
    qaoa_ratio,
    tune_gqw,
    tune_qaoa,
)

__all__ = [
    "BEZIER_BOUNDS",
    "DEFAULT_BEZIER_X0",
    "OptResult",
    "gqw_score",
    "initial_simplex",
    "nelder_mead",
    "qaoa_ratio",
    "tune_gqw",
    "tune_qaoa",
]
