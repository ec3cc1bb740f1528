"""Shared models for samba_gqw."""

from samba_gqw.models.seeding import derive_seed
from samba_gqw.models.state import StateVector
from samba_gqw.models.types import (
    BitString,
    GraphKind,
    MixerKind,
    ObjectiveKind,
    ProblemFamily,
    SymmetryKind,
)

__all__ = [
    "BitString",
    "GraphKind",
    "MixerKind",
    "ObjectiveKind",
    "ProblemFamily",
    "StateVector",
    "SymmetryKind",
    "derive_seed",
]
