"""Dense matrix-exponential integrator used as ground truth at small n."""

import logging
import math

import numpy as np
from scipy.linalg import expm

from samba_gqw.exceptions import DimensionMismatchError, EvolutionError, QubitLimitError
from samba_gqw.hubo import Spectrum
from samba_gqw.mixers import MixerSpec, mixer_matrix
from samba_gqw.models import StateVector
from samba_gqw.schedule import HoppingRate

logger = logging.getLogger(__name__)

DEFAULT_REFERENCE_MAX_QUBITS = 12


def evolve_reference(
    initial: StateVector,
    sched: HoppingRate,
    costs: Spectrum,
    spec: MixerSpec,
    steps_per_segment: int,
    maximize: bool = False,
    max_qubits: int = DEFAULT_REFERENCE_MAX_QUBITS,
) -> StateVector:
    """Integrate H(t) = Gamma(t) H_M + H_C with midpoint-rate dense exponentials.

    Each segment between consecutive breakpoints is split into
    ``steps_per_segment`` sub-steps; a sub-step applies
    expm(-i dt (Gamma_mid H_M + H_C)).

    Raises:
        QubitLimitError: If n exceeds max_qubits
    """
    n = initial.n
    if n > max_qubits:
        raise QubitLimitError(
            f"dense reference needs 2^{n} x 2^{n} matrices; cap is {max_qubits} qubits",
            n=n,
            cap=max_qubits,
        )
    if spec.n != n or costs.costs.shape[0] != initial.dimension:
        raise DimensionMismatchError("state, mixer and spectrum disagree on n")
    if steps_per_segment < 1:
        raise EvolutionError("steps_per_segment must be at least 1")

    mixer = mixer_matrix(spec)
    if maximize:
        mixer = -mixer
    diagonal = np.diag(costs.costs.astype(np.complex128))
    amplitudes = initial.amplitudes.copy()

    points = sched.breakpoints()
    for start, end in zip(points, points[1:], strict=False):
        length = end - start
        if length <= 0:
            continue
        dt = length / steps_per_segment
        for step in range(steps_per_segment):
            gamma = sched.gamma_at(start + (step + 0.5) * dt)
            propagator = expm(-1j * dt * (gamma * mixer + diagonal))
            amplitudes = propagator @ amplitudes

    logger.debug("Reference evolution over T=%g done", sched.total_time)
    return StateVector(amplitudes, n)


def two_state_lower_probability(t: float, gamma: float, delta: float) -> float:
    """1/2 + (Gamma delta / (Gamma^2 + delta^2)) sin^2(t sqrt(Gamma^2 + delta^2))."""
    omega = math.hypot(gamma, delta)
    if omega == 0.0:
        return 0.5
    return 0.5 + (gamma * delta / omega**2) * math.sin(t * omega) ** 2
