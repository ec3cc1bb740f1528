"""Type definitions for samba_gqw.

Bit-order convention: variable x_i is bit i of the basis-state integer
(x_0 is the least significant bit). Strings render x_0 x_1 ... x_{n-1}
from left to right.
"""

from dataclasses import dataclass
from enum import Enum

from samba_gqw.exceptions import ValidationError

MAX_BITSTRING_LENGTH = 30


class MixerKind(str, Enum):
    """Walk connectivity of the mixer Hamiltonian."""
    X_HYPERCUBE = "x_hypercube"
    XY_RING = "xy_ring"


class ProblemFamily(str, Enum):
    """Supported problem families."""
    MAXCUT = "maxcut"
    MIS = "mis"
    PORTFOLIO = "portfolio"
    LABS = "labs"
    MAXKSAT = "maxksat"
    TSP = "tsp"


class GraphKind(str, Enum):
    """Origin of a graph instance."""
    ERDOS_RENYI = "erdos_renyi"
    UNIT_DISK = "unit_disk"
    COMPLETE = "complete"
    EXPLICIT = "explicit"


class SymmetryKind(str, Enum):
    """Known cost-preserving involutions of a problem."""
    NONE = "none"
    GLOBAL_BIT_FLIP = "global_bit_flip"
    PROBLEM_SPECIFIC_LIST = "problem_specific_list"


class ObjectiveKind(str, Enum):
    """Scalar optimized when tuning the Bezier hopping rate."""
    QUALITY = "quality"
    P0 = "p0"


@dataclass(frozen=True)
class BitString:
    """A decision x in {0,1}^n."""
    bits: tuple[int, ...]

    def __post_init__(self):
        """Validate bit values."""
        if not 1 <= len(self.bits) <= MAX_BITSTRING_LENGTH:
            raise ValidationError(
                f"BitString length must be between 1 and {MAX_BITSTRING_LENGTH}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValidationError("BitString elements must be 0 or 1")

    @property
    def n(self) -> int:
        """Number of variables."""
        return len(self.bits)

    @property
    def weight(self) -> int:
        """Hamming weight."""
        return sum(self.bits)

    @classmethod
    def from_int(cls, index: int, n: int) -> "BitString":
        """Build the decision whose basis-state index is ``index``."""
        if not 0 <= index < (1 << n):
            raise ValidationError(f"index {index} out of range for n={n}")
        return cls(tuple((index >> i) & 1 for i in range(n)))

    @classmethod
    def from_string(cls, text: str) -> "BitString":
        """Parse a string such as ``"0110"`` (x_0 first)."""
        if any(c not in "01" for c in text):
            raise ValidationError(f"invalid bit string: {text!r}")
        return cls(tuple(int(c) for c in text))

    def to_int(self) -> int:
        """Basis-state index of this decision."""
        return sum(b << i for i, b in enumerate(self.bits))

    def complement(self) -> "BitString":
        """Flip every bit."""
        return BitString(tuple(1 - b for b in self.bits))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)
