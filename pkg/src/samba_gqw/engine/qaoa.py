"""QAOA ansatz on top of the structured layer kernels."""

from collections.abc import Sequence

from samba_gqw.engine.layers import apply_cost_phase, apply_mixer
from samba_gqw.exceptions import EvolutionError
from samba_gqw.hubo import Spectrum
from samba_gqw.mixers import MixerSpec
from samba_gqw.models import StateVector


def split_angles(angles: Sequence[float]) -> tuple[list[float], list[float]]:
    """Split (gamma_1, beta_1, ..., gamma_p, beta_p) into gammas and betas."""
    if len(angles) % 2:
        raise EvolutionError(f"QAOA needs an even number of angles, got {len(angles)}")
    values = [float(a) for a in angles]
    return values[0::2], values[1::2]


def qaoa_evolve(
    initial: StateVector,
    angles: Sequence[float],
    costs: Spectrum,
    spec: MixerSpec,
    maximize: bool = False,
    inner_trotter: int = 4,
) -> StateVector:
    """Apply p rounds of exp(-i gamma_k H_C) followed by the beta_k mixer.

    ``beta_k`` is the argument of every R_X gate with the minimisation sign,
    i.e. R_X(-beta_k) per qubit, which is exp(-i (beta_k / 2) H_M). The ring
    mixer uses the same half-angle.

    Args:
        initial: Starting state, usually the uniform superposition
        angles: Interleaved (gamma_k, beta_k) pairs
        costs: Exact spectrum
        spec: Mixer specification
        maximize: Flip the mixer sign
        inner_trotter: Bond sweeps per ring-mixer layer

    Raises:
        EvolutionError: If the angle count is odd
    """
    gammas, betas = split_angles(angles)
    state = initial
    for gamma, beta in zip(gammas, betas, strict=True):
        state = apply_cost_phase(state, costs, gamma)
        state = apply_mixer(state, spec, beta / 2.0, maximize=maximize, inner_trotter=inner_trotter)
    return state
