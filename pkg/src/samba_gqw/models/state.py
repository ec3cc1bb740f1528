"""State-vector container."""

from dataclasses import dataclass

import numpy as np

from samba_gqw.exceptions import DimensionMismatchError, ValidationError


@dataclass(frozen=True, eq=False)
class StateVector:
    """2^n complex amplitudes of the walker."""
    amplitudes: np.ndarray
    n: int

    def __post_init__(self):
        """Validate shape."""
        if self.n < 1:
            raise ValidationError("StateVector needs at least one qubit")
        if self.amplitudes.shape != (1 << self.n,):
            raise DimensionMismatchError(
                f"expected {1 << self.n} amplitudes, got shape {self.amplitudes.shape}"
            )

    @classmethod
    def from_amplitudes(cls, amplitudes: np.ndarray) -> "StateVector":
        """Wrap an amplitude array whose length is a power of two."""
        data = np.asarray(amplitudes, dtype=np.complex128)
        size = data.shape[0]
        n = size.bit_length() - 1
        if size < 2 or (1 << n) != size:
            raise DimensionMismatchError(f"amplitude count {size} is not a power of two")
        return cls(data, n)

    @classmethod
    def basis(cls, index: int, n: int) -> "StateVector":
        """Computational basis state |index>."""
        data = np.zeros(1 << n, dtype=np.complex128)
        data[index] = 1.0
        return cls(data, n)

    @property
    def dimension(self) -> int:
        """Hilbert-space dimension 2^n."""
        return 1 << self.n

    @property
    def probabilities(self) -> np.ndarray:
        """Measurement distribution |a_j|^2."""
        return np.abs(self.amplitudes) ** 2

    @property
    def norm(self) -> float:
        """Euclidean norm of the amplitudes."""
        return float(np.linalg.norm(self.amplitudes))

    def fidelity(self, other: "StateVector") -> float:
        """|<self|other>|^2."""
        if other.n != self.n:
            raise DimensionMismatchError(f"n={self.n} vs n={other.n}")
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)) ** 2)
