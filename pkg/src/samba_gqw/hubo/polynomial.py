"""Multilinear binary polynomials (HUBO cost functions)."""

import json
from collections.abc import Iterable, Mapping
from typing import Any

import numpy as np

from samba_gqw.exceptions import DimensionMismatchError, ValidationError
from samba_gqw.models import BitString

Monomial = tuple[int, ...]
Scalar = int | float

# Coefficients below this fraction of the largest magnitude are treated as cancelled.
CANCELLATION_TOLERANCE = 1e-14


def _normalize(n: int, terms: Iterable[tuple[Iterable[int], float]]) -> dict[Monomial, float]:
    """Merge terms, reduce x_i^2 to x_i and drop zero coefficients."""
    merged: dict[Monomial, float] = {}
    for variables, coeff in terms:
        monomial = tuple(sorted(set(variables)))
        for i in monomial:
            if not 0 <= i < n:
                raise ValidationError(f"variable index {i} out of range for n={n}")
        merged[monomial] = merged.get(monomial, 0.0) + float(coeff)

    if not merged:
        return {}
    scale = max(abs(c) for c in merged.values())
    cutoff = CANCELLATION_TOLERANCE * scale
    return {m: c for m, c in merged.items() if c != 0.0 and abs(c) > cutoff}


class Polynomial:
    """Sparse multilinear polynomial C(x) = sum_m alpha_m prod_{i in m} x_i.

    Monomials are sorted index tuples; the empty tuple holds the constant.
    Instances are immutable: arithmetic returns new polynomials.
    """

    __slots__ = ("_n", "_terms")

    def __init__(self, n: int, terms: Mapping[Iterable[int], float] | Iterable[tuple] = ()):
        if n < 1:
            raise ValidationError("Polynomial needs at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._n = n
        self._terms = _normalize(n, items)

    @classmethod
    def constant(cls, n: int, value: float) -> "Polynomial":
        """Constant polynomial."""
        return cls(n, {(): value})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        """The single variable x_i."""
        return cls(n, {(i,): 1.0})

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        """The zero polynomial."""
        return cls(n)

    @property
    def n(self) -> int:
        """Number of variables."""
        return self._n

    @property
    def terms(self) -> dict[Monomial, float]:
        """Copy of the monomial map."""
        return dict(self._terms)

    @property
    def degree(self) -> int:
        """Size of the largest monomial (0 for constants and zero)."""
        return max((len(m) for m in self._terms), default=0)

    @property
    def constant_term(self) -> float:
        """Coefficient of the empty monomial."""
        return self._terms.get((), 0.0)

    @property
    def is_zero(self) -> bool:
        """True when no term survives normalization."""
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial(n={self._n}, terms={len(self._terms)}, degree={self.degree})"

    # Arithmetic

    def _coerce(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._n != self._n:
                raise DimensionMismatchError(
                    f"polynomials over n={self._n} and n={other._n} cannot be combined"
                )
            return other
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Polynomial.constant(self._n, float(other))
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        rhs = self._coerce(other)
        return Polynomial(self._n, list(self._terms.items()) + list(rhs._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return self.scale(-1.0)

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self._coerce(other) + (-self)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        rhs = self._coerce(other)
        products = [
            (set(ma) | set(mb), ca * cb)
            for ma, ca in self._terms.items()
            for mb, cb in rhs._terms.items()
        ]
        return Polynomial(self._n, products)

    __rmul__ = __mul__

    def scale(self, factor: float) -> "Polynomial":
        """Multiply every coefficient by ``factor``."""
        return Polynomial(self._n, {m: c * factor for m, c in self._terms.items()})

    # Evaluation

    def evaluate(self, x: BitString) -> float:
        """C(x) for a decision of matching length."""
        if x.n != self._n:
            raise DimensionMismatchError(
                f"decision has {x.n} variables, polynomial has {self._n}"
            )
        return self.evaluate_index(x.to_int())

    def evaluate_index(self, index: int) -> float:
        """C(x) for the decision whose basis-state index is ``index``."""
        total = 0.0
        for monomial, coeff in self._terms.items():
            if all((index >> i) & 1 for i in monomial):
                total += coeff
        return total

    def monomial_masks(self) -> tuple[np.ndarray, np.ndarray]:
        """Integer bit masks and coefficients of all terms."""
        masks = np.array(
            [sum(1 << i for i in m) for m in self._terms], dtype=np.int64
        )
        coeffs = np.array(list(self._terms.values()), dtype=np.float64)
        return masks, coeffs

    def evaluate_all(self) -> np.ndarray:
        """C(j) for every basis index j in [0, 2^n)."""
        indices = np.arange(1 << self._n, dtype=np.int64)
        costs = np.zeros(1 << self._n, dtype=np.float64)
        for mask, coeff in zip(*self.monomial_masks(), strict=True):
            costs += coeff * ((indices & mask) == mask)
        return costs

    # Serialization

    def sorted_terms(self) -> list[tuple[Monomial, float]]:
        """Terms ordered by (monomial size, lexicographic indices)."""
        return sorted(self._terms.items(), key=lambda item: (len(item[0]), item[0]))

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready representation."""
        return {
            "n": self._n,
            "terms": [{"vars": list(m), "coeff": c} for m, c in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Polynomial":
        """Inverse of :meth:`to_dict`."""
        try:
            return cls(int(data["n"]), [(t["vars"], t["coeff"]) for t in data["terms"]])
        except (KeyError, TypeError) as e:
            raise ValidationError(f"malformed polynomial data: {e}") from e

    def to_json(self) -> str:
        """Deterministic JSON text."""
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        """Parse :meth:`to_json` output."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"invalid polynomial JSON: {e}") from e
        return cls.from_dict(data)


def evaluate(poly: Polynomial, x: BitString) -> float:
    """C(x)."""
    return poly.evaluate(x)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    """a + b."""
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """a * b with multilinear reduction."""
    return a * b


def poly_scale(a: Polynomial, c: float) -> Polynomial:
    """c * a."""
    return a.scale(c)
