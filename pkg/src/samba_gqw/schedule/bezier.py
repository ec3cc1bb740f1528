"""Cubic Bezier hopping rate used by the tuned-GQW baseline."""

from collections.abc import Sequence

import numpy as np
from scipy.optimize import bisect

from samba_gqw.exceptions import ValidationError

BEZIER_A = 2.0
BEZIER_B = -3.0
BISECTION_TOLERANCE = 1e-10
# Keeps x0 < x1 and x2 < x3 strict so x(tau) is strictly increasing.
CONTROL_MARGIN = 1e-6


def control_points(theta: Sequence[float]) -> np.ndarray:
    """The four control points p0=(0,1), p1, p2, p3=(1,0) as a (4, 2) array."""
    if len(theta) != 6:
        raise ValidationError("Bezier schedule takes 6 parameters")
    if any(not 0.0 <= v <= 1.0 for v in theta):
        raise ValidationError("Bezier parameters must lie in [0, 1]")
    x1, y1, x2, y2, _, _ = theta
    x1 = min(max(x1, CONTROL_MARGIN), 1.0)
    x2 = min(max(x2, 0.0), 1.0 - CONTROL_MARGIN)
    return np.array([[0.0, 1.0], [x1, y1], [x2, y2], [1.0, 0.0]])


def _cubic(points: np.ndarray, tau: float) -> np.ndarray:
    u = 1.0 - tau
    weights = np.array([u**3, 3 * u**2 * tau, 3 * u * tau**2, tau**3])
    return weights @ points


def bezier_gamma(theta: Sequence[float], t_norm: float) -> float:
    """Gamma(t) = y(tau) 10^(2 alpha) + (1 - y(tau)) 10^(-3 beta) with x(tau) = t_norm.

    Args:
        theta: (x1, y1, x2, y2, alpha, beta) in [0, 1]^6
        t_norm: Normalized time in [0, 1]

    Returns:
        Hopping rate at t_norm
    """
    points = control_points(theta)
    alpha, beta = theta[4], theta[5]
    t_norm = min(max(t_norm, 0.0), 1.0)

    if t_norm <= 0.0:
        tau = 0.0
    elif t_norm >= 1.0:
        tau = 1.0
    else:
        tau = bisect(
            lambda s: _cubic(points, s)[0] - t_norm, 0.0, 1.0, xtol=BISECTION_TOLERANCE
        )
    y = float(_cubic(points, tau)[1])
    return y * 10.0 ** (BEZIER_A * alpha) + (1.0 - y) * 10.0 ** (BEZIER_B * beta)
