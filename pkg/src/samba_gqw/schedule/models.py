"""Hopping-rate schedules and discretized layer plans."""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Protocol, runtime_checkable

import numpy as np

from samba_gqw.exceptions import ScheduleError, ValidationError
from samba_gqw.schedule.bezier import bezier_gamma

logger = logging.getLogger(__name__)

# pi / (2 sqrt 2): time that maximizes transfer across one balanced gap at unit rate.
TRANSFER_TIME = math.pi / (2.0 * math.sqrt(2.0))


@runtime_checkable
class HoppingRate(Protocol):
    """A hopping rate Gamma(t) on [0, total_time]."""

    @property
    def total_time(self) -> float: ...

    def gamma_at(self, t: float) -> float: ...

    def breakpoints(self) -> tuple[float, ...]: ...


@dataclass(frozen=True)
class SampledGaps:
    """Running means of the largest descending half-gaps, keyed by energy."""
    entries: dict[float, float] = field(default_factory=dict)
    gap_counts: dict[float, int] = field(default_factory=dict)
    visit_counts: dict[float, int] = field(default_factory=dict)
    q_used: int = 0
    q_requested: int = 0
    exact: bool = False

    @property
    def is_empty(self) -> bool:
        """True when no descending transition was sampled."""
        return not self.entries


@dataclass(frozen=True)
class Schedule:
    """Piecewise-linear Gamma(t) through the nodes (s_l, e_{l+1}) and (T, 0)."""
    levels: tuple[float, ...]
    durations: tuple[float, ...]
    node_times: tuple[float, ...]
    q_used: int = 0
    q_requested: int = 0
    exact: bool = False

    def __post_init__(self):
        """Validate schedule structure."""
        if not self.levels:
            raise ScheduleError("schedule needs at least one nonzero level")
        if any(a <= b for a, b in zip(self.levels, self.levels[1:], strict=False)):
            raise ScheduleError("schedule levels must be strictly decreasing")
        if self.levels[-1] <= 0:
            raise ScheduleError("schedule levels must be positive")
        if len(self.durations) != len(self.levels):
            raise ScheduleError("one duration per level is required")
        if len(self.node_times) != len(self.levels) + 1:
            raise ScheduleError("node_times must have one entry more than levels")

    @classmethod
    def from_levels(
        cls,
        levels: tuple[float, ...],
        q_used: int = 0,
        q_requested: int = 0,
        exact: bool = False,
    ) -> "Schedule":
        """Durations tau_l = (pi / (2 sqrt 2)) / e_l and their cumulative node times."""
        durations = tuple(TRANSFER_TIME / e for e in levels)
        node_times = (0.0, *np.cumsum(durations).tolist())
        return cls(tuple(levels), durations, tuple(node_times), q_used, q_requested, exact)

    @property
    def gammas(self) -> tuple[float, ...]:
        """Node values e_1 > ... > e_q > 0 followed by the terminal 0."""
        return (*self.levels, 0.0)

    @property
    def total_time(self) -> float:
        """T = s_q."""
        return self.node_times[-1]

    @property
    def num_segments(self) -> int:
        """q, the number of linear pieces."""
        return len(self.levels)

    def breakpoints(self) -> tuple[float, ...]:
        """Node times."""
        return self.node_times

    def gamma_at(self, t: float) -> float:
        """Linear interpolation of the nodes, clamped to [0, T]."""
        if t < 0.0 or t > self.total_time:
            logger.warning("gamma_at(%g) outside [0, %g]; clamping", t, self.total_time)
            t = min(max(t, 0.0), self.total_time)
        return float(np.interp(t, self.node_times, self.gammas))

    def nodes(self) -> list[tuple[float, float]]:
        """(time, Gamma) interpolation nodes."""
        return list(zip(self.node_times, self.gammas, strict=True))

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready representation."""
        return {
            "levels": list(self.levels),
            "durations": list(self.durations),
            "node_times": list(self.node_times),
            "total_time": self.total_time,
            "q_used": self.q_used,
            "q_requested": self.q_requested,
            "exact": self.exact,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Schedule":
        """Rebuild from :meth:`to_dict` output; durations are recomputed from the levels."""
        try:
            levels = tuple(float(v) for v in data["levels"])
        except (KeyError, TypeError, ValueError) as e:
            raise ScheduleError(f"malformed schedule data: {e}") from e
        schedule = cls.from_levels(
            levels,
            q_used=int(data.get("q_used", 0)),
            q_requested=int(data.get("q_requested", 0)),
            exact=bool(data.get("exact", False)),
        )
        stored = data.get("total_time")
        if stored is not None and not math.isclose(stored, schedule.total_time, rel_tol=1e-9):
            raise ScheduleError(
                f"stored total_time {stored} disagrees with levels ({schedule.total_time})"
            )
        return schedule


@dataclass(frozen=True)
class BezierSchedule:
    """Gamma(t) = bezier_gamma(theta, t / T)."""
    theta: tuple[float, ...]
    total_time: float

    def __post_init__(self):
        """Validate parameters."""
        if len(self.theta) != 6:
            raise ValidationError("Bezier schedule takes 6 parameters")
        if self.total_time <= 0:
            raise ValidationError("total_time must be positive")

    def gamma_at(self, t: float) -> float:
        """Hopping rate at physical time t."""
        return bezier_gamma(self.theta, t / self.total_time)

    def breakpoints(self) -> tuple[float, ...]:
        """Single smooth segment."""
        return (0.0, self.total_time)


@dataclass(frozen=True)
class ConstantRate:
    """Gamma(t) = gamma on [0, total_time]."""
    gamma: float
    total_time: float

    def gamma_at(self, t: float) -> float:  # noqa: ARG002
        """The constant rate."""
        return self.gamma

    def breakpoints(self) -> tuple[float, ...]:
        """Single segment."""
        return (0.0, self.total_time)


@dataclass(frozen=True)
class Layer:
    """One cost-phase plus mixer layer."""
    dt: float
    gamma: float
    segment: int = 0
    t_end: float = 0.0

    @property
    def theta(self) -> float:
        """Mixer angle dt * Gamma."""
        return self.dt * self.gamma


@dataclass(frozen=True)
class LayerPlan:
    """Ordered layers realizing the first-order product formula."""
    layers: tuple[Layer, ...]
    slices: tuple[int, ...] = ()

    @property
    def total_layers(self) -> int:
        """p_bar = sum_l p_l."""
        return len(self.layers)

    @property
    def total_time(self) -> float:
        """Sum of the cost-phase durations."""
        return float(math.fsum(layer.dt for layer in self.layers))

    def depth(self, d_sp: int = 1, d_m: int = 1, d_c: int = 1) -> int:
        """d = d_SP + p_bar (d_M + d_C)."""
        return d_sp + self.total_layers * (d_m + d_c)

    def as_qaoa_angles(self) -> list[tuple[float, float]]:
        """(gamma_k, beta_k) pairs in the QAOA angle convention (beta_k = 2 dt Gamma)."""
        return [(layer.dt, 2.0 * layer.theta) for layer in self.layers]

    def to_list(self) -> list[dict[str, float]]:
        """JSON-ready list of {dt, theta}."""
        return [{"dt": layer.dt, "theta": layer.theta} for layer in self.layers]

    @classmethod
    def from_list(cls, data: list[dict[str, float]]) -> "LayerPlan":
        """Rebuild a flat plan from :meth:`to_list` output."""
        layers = []
        elapsed = 0.0
        for entry in data:
            dt = float(entry["dt"])
            if dt <= 0:
                raise ScheduleError("layer durations must be positive")
            elapsed += dt
            layers.append(Layer(dt=dt, gamma=float(entry["theta"]) / dt, t_end=elapsed))
        return cls(tuple(layers), (len(layers),))
