"""State-vector evolution kernels, reference integrator and QAOA."""

from samba_gqw.engine.evolution import (
    EvolutionTrace,
    ShotResult,
    best_sampled,
    evolve_layer_plan,
    sample_counts,
)
from samba_gqw.engine.layers import (
    apply_cost_phase,
    apply_mixer,
    apply_x_mixer_layer,
    apply_xy_ring_layer,
    bond_groups,
)
from samba_gqw.engine.qaoa import qaoa_evolve, split_angles
from samba_gqw.engine.reference import (
    DEFAULT_REFERENCE_MAX_QUBITS,
    evolve_reference,
    two_state_lower_probability,
)

__all__ = [
    "DEFAULT_REFERENCE_MAX_QUBITS",
    "EvolutionTrace",
    "ShotResult",
    "apply_cost_phase",
    "apply_mixer",
    "apply_x_mixer_layer",
    "apply_xy_ring_layer",
    "best_sampled",
    "bond_groups",
    "evolve_layer_plan",
    "evolve_reference",
    "qaoa_evolve",
    "sample_counts",
    "split_angles",
    "two_state_lower_probability",
]
