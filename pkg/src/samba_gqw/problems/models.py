"""Problem instance models."""

from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from samba_gqw.exceptions import ValidationError
from samba_gqw.hubo import Polynomial
from samba_gqw.models import BitString, GraphKind, ProblemFamily, SymmetryKind


@dataclass(frozen=True)
class GraphInstance:
    """Weighted graph; edges are stored once with i < j."""
    n_vertices: int
    edges: tuple[tuple[int, int, float], ...]
    vertex_weights: tuple[float, ...] | None = None
    kind: GraphKind = GraphKind.EXPLICIT
    positions: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        """Validate edge list."""
        if self.n_vertices < 1:
            raise ValidationError("graph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        for i, j, _ in self.edges:
            if not (0 <= i < j < self.n_vertices):
                raise ValidationError(
                    f"edge ({i}, {j}) must satisfy 0 <= i < j < {self.n_vertices}"
                )
            if (i, j) in seen:
                raise ValidationError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        if self.vertex_weights is not None and len(self.vertex_weights) != self.n_vertices:
            raise ValidationError("vertex_weights length must equal n_vertices")

    @property
    def num_edges(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def weights_or_ones(self) -> tuple[float, ...]:
        """Vertex weights, defaulting to all ones."""
        if self.vertex_weights is None:
            return (1.0,) * self.n_vertices
        return self.vertex_weights

    @property
    def is_complete(self) -> bool:
        """True when every unordered pair is an edge."""
        n = self.n_vertices
        return len(self.edges) == n * (n - 1) // 2

    def weight(self, i: int, j: int) -> float:
        """Symmetric edge weight, 0 when absent."""
        a, b = (i, j) if i < j else (j, i)
        for u, v, w in self.edges:
            if (u, v) == (a, b):
                return w
        return 0.0

    def weight_matrix(self) -> np.ndarray:
        """Dense symmetric weight matrix."""
        matrix = np.zeros((self.n_vertices, self.n_vertices))
        for i, j, w in self.edges:
            matrix[i, j] = matrix[j, i] = w
        return matrix


class Literal(NamedTuple):
    """SAT literal: variable index and negation flag."""
    var: int
    negated: bool = False

    def to_signed(self) -> int:
        """DIMACS-style signed 1-based integer."""
        return -(self.var + 1) if self.negated else self.var + 1

    @classmethod
    def from_signed(cls, value: int) -> "Literal":
        """Inverse of :meth:`to_signed`."""
        if value == 0:
            raise ValidationError("literal 0 is not allowed")
        return cls(abs(value) - 1, value < 0)


@dataclass(frozen=True)
class SatInstance:
    """MAX-k-SAT instance."""
    n: int
    k: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self):
        """Validate clauses."""
        if self.k < 1 or self.k > self.n:
            raise ValidationError(f"k must be between 1 and n={self.n}")
        for clause in self.clauses:
            if len(clause) != self.k:
                raise ValidationError(f"clause {clause} does not have {self.k} literals")
            variables = {lit.var for lit in clause}
            if len(variables) != self.k:
                raise ValidationError(f"clause {clause} repeats a variable")
            if any(not 0 <= v < self.n for v in variables):
                raise ValidationError(f"clause {clause} has a variable outside [0, {self.n})")

    @property
    def m(self) -> int:
        """Number of clauses."""
        return len(self.clauses)


@dataclass(frozen=True)
class PortfolioInstance:
    """Cardinality-constrained mean-variance portfolio."""
    n: int
    mu: tuple[float, ...]
    sigma: tuple[tuple[int, int, float], ...]
    lam: float
    k: int

    def __post_init__(self):
        """Validate portfolio data."""
        if len(self.mu) != self.n:
            raise ValidationError("mu must have one entry per asset")
        if self.lam <= 0:
            raise ValidationError("risk appetite lam must be positive")
        if not 0 <= self.k <= self.n:
            raise ValidationError(f"k must be between 0 and {self.n}")
        for i, j, _ in self.sigma:
            if not 0 <= i < j < self.n:
                raise ValidationError(f"covariance entry ({i}, {j}) must satisfy i < j < n")


@dataclass(frozen=True)
class SymmetryTag:
    """Cost-preserving involutions, each an XOR mask on the basis index."""
    kind: SymmetryKind = SymmetryKind.NONE
    masks: tuple[int, ...] = ()

    def __post_init__(self):
        """Validate masks against kind."""
        if self.kind is SymmetryKind.NONE and self.masks:
            raise ValidationError("symmetry kind 'none' takes no masks")
        if self.kind is not SymmetryKind.NONE and not self.masks:
            raise ValidationError(f"symmetry kind {self.kind.value!r} needs masks")
        if any(m <= 0 for m in self.masks):
            raise ValidationError("symmetry masks must be positive")

    @classmethod
    def none(cls) -> "SymmetryTag":
        """No known symmetry."""
        return cls()

    @classmethod
    def global_bit_flip(cls, n: int) -> "SymmetryTag":
        """x -> complement(x)."""
        return cls(SymmetryKind.GLOBAL_BIT_FLIP, ((1 << n) - 1,))

    def mates(self, index: int) -> list[int]:
        """Basis indices equivalent to ``index``."""
        return [index ^ m for m in self.masks]

    def mate(self, x: BitString) -> BitString:
        """First equivalent decision of ``x`` (x itself without symmetry)."""
        if not self.masks:
            return x
        return BitString.from_int(x.to_int() ^ self.masks[0], x.n)


@dataclass(frozen=True, eq=False)
class Instance:
    """A problem instance with its compiled cost polynomial."""
    family: ProblemFamily
    data: Any
    polynomial: Polynomial
    symmetry: SymmetryTag = field(default_factory=SymmetryTag)
    params: dict[str, Any] = field(default_factory=dict)

    @property
    def n(self) -> int:
        """Number of binary variables."""
        return self.polynomial.n
