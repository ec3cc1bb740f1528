"""Result types for parameter tuning."""

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class OptResult:
    """Outcome of one bounded Nelder-Mead run (minimisation convention)."""
    best_params: tuple[float, ...]
    best_value: float
    iterations_used: int
    history: list[tuple[tuple[float, ...], float]] = field(default_factory=list)
    budget_exhausted: bool = False

    @property
    def evaluations(self) -> int:
        """Number of objective calls."""
        return len(self.history)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready summary without the full history."""
        return {
            "best_params": list(self.best_params),
            "best_value": self.best_value,
            "iterations_used": self.iterations_used,
            "evaluations": self.evaluations,
            "budget_exhausted": self.budget_exhausted,
        }
