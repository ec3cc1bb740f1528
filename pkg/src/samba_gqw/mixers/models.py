"""Mixer specifications."""

from dataclasses import dataclass

from samba_gqw.exceptions import ValidationError
from samba_gqw.models import MixerKind

MIXER_GAP = 2.0


@dataclass(frozen=True)
class MixerSpec:
    """Walk connectivity: transverse-field hypercube or Hamming-weight-preserving ring."""
    kind: MixerKind
    n: int
    hamming_weight: int | None = None

    def __post_init__(self):
        """Validate mixer parameters."""
        if self.n < 1:
            raise ValidationError("mixer needs at least one qubit")
        if self.kind is MixerKind.XY_RING:
            if self.n < 2:
                raise ValidationError("xy_ring mixer needs at least 2 sites")
            if self.hamming_weight is None:
                raise ValidationError("xy_ring mixer requires hamming_weight")
            if not 0 <= self.hamming_weight <= self.n:
                raise ValidationError(
                    f"hamming_weight must be between 0 and {self.n}"
                )

    @property
    def mixer_gap(self) -> float:
        """|Delta^M|, the same for both supported kinds."""
        return MIXER_GAP

    @property
    def is_constrained(self) -> bool:
        """True when the feasible set is a fixed Hamming-weight shell."""
        return self.kind is MixerKind.XY_RING

    @classmethod
    def hypercube(cls, n: int) -> "MixerSpec":
        """X mixer on n qubits."""
        return cls(MixerKind.X_HYPERCUBE, n)

    @classmethod
    def ring(cls, n: int, hamming_weight: int) -> "MixerSpec":
        """Ring XY mixer on n qubits restricted to weight ``hamming_weight``."""
        return cls(MixerKind.XY_RING, n, hamming_weight)
