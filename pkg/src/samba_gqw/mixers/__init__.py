"""Mixer connectivity, feasible sets and initial states."""

from samba_gqw.mixers.models import MIXER_GAP, MixerSpec
from samba_gqw.mixers.operations import (
    feasible_count,
    feasible_indices,
    feasible_mask,
    initial_state,
    is_feasible_index,
    mixer_matrix,
    neighbor_indices,
    neighbors,
    popcounts,
    ring_bonds,
)

__all__ = [
    "MIXER_GAP",
    "MixerSpec",
    "feasible_count",
    "feasible_indices",
    "feasible_mask",
    "initial_state",
    "is_feasible_index",
    "mixer_matrix",
    "neighbor_indices",
    "neighbors",
    "popcounts",
    "ring_bonds",
]
