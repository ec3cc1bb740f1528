"""Configuration management for samba_gqw."""

import os
from dataclasses import dataclass, field
from typing import Any

from samba_gqw.exceptions import ConfigurationError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _env_int(name: str, default: str) -> int:
    """Integer environment setting."""
    raw = os.getenv(name, default)
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from e


def _env_float(name: str, default: str) -> float:
    """Float environment setting."""
    raw = os.getenv(name, default)
    try:
        return float(raw)
    except ValueError as e:
        raise ConfigurationError(f"{name} must be a number, got {raw!r}") from e


@dataclass
class SambaConfig:
    """Numerical limits and defaults shared by the pipeline."""

    # Dense-operation caps
    spectrum_max_qubits: int = field(
        default_factory=lambda: _env_int("SAMBA_SPECTRUM_MAX_QUBITS", "14")
    )
    reference_max_qubits: int = field(
        default_factory=lambda: _env_int("SAMBA_REFERENCE_MAX_QUBITS", "12")
    )

    # Ranking and display
    rank_tolerance: float = field(
        default_factory=lambda: _env_float("SAMBA_RANK_TOLERANCE", "1e-9")
    )
    display_threshold: float = field(
        default_factory=lambda: _env_float("SAMBA_DISPLAY_THRESHOLD", "1e-3")
    )
    top_fraction: float = field(
        default_factory=lambda: _env_float("SAMBA_TOP_FRACTION", "0.05")
    )
    tracked_ranks: int = field(
        default_factory=lambda: _env_int("SAMBA_TRACKED_RANKS", "5")
    )

    # Evolution
    xy_inner_trotter: int = field(
        default_factory=lambda: _env_int("SAMBA_XY_INNER_TROTTER", "4")
    )
    default_slices: int = field(
        default_factory=lambda: _env_int("SAMBA_DEFAULT_SLICES", "8")
    )
    snapshot_every: int = field(
        default_factory=lambda: _env_int("SAMBA_SNAPSHOT_EVERY", "1")
    )

    # Baseline tuning budgets
    gqw_max_iter: int = field(
        default_factory=lambda: _env_int("SAMBA_GQW_MAX_ITER", "100")
    )
    qaoa_max_iter: int = field(
        default_factory=lambda: _env_int("SAMBA_QAOA_MAX_ITER", "3000")
    )

    # Sweeps and sampling
    max_workers: int = field(
        default_factory=lambda: _env_int("SAMBA_MAX_WORKERS", "4")
    )
    permutation_sampling_limit: int = field(
        default_factory=lambda: _env_int("SAMBA_PERMUTATION_SAMPLING_LIMIT", "1048576")
    )

    log_level: str = field(
        default_factory=lambda: os.getenv("SAMBA_LOG_LEVEL", "INFO").upper()
    )

    def __post_init__(self):
        """Validate configuration after initialization."""
        self._validate()

    def _validate(self):
        """Validate configuration values."""
        if self.spectrum_max_qubits < 1:
            raise ConfigurationError("spectrum_max_qubits must be at least 1")

        if self.reference_max_qubits < 1:
            raise ConfigurationError("reference_max_qubits must be at least 1")

        if self.reference_max_qubits > self.spectrum_max_qubits:
            raise ConfigurationError(
                "reference_max_qubits cannot exceed spectrum_max_qubits"
            )

        if not 0.0 < self.rank_tolerance < 1e-3:
            raise ConfigurationError("rank_tolerance must be in (0, 1e-3)")

        if not 0.0 <= self.display_threshold < 1.0:
            raise ConfigurationError("display_threshold must be in [0, 1)")

        if not 0.0 < self.top_fraction <= 1.0:
            raise ConfigurationError("top_fraction must be in (0, 1]")

        if self.tracked_ranks < 0:
            raise ConfigurationError("tracked_ranks must be non-negative")

        if self.xy_inner_trotter < 1:
            raise ConfigurationError("xy_inner_trotter must be at least 1")

        if self.default_slices < 1:
            raise ConfigurationError("default_slices must be at least 1")

        if self.snapshot_every < 1:
            raise ConfigurationError("snapshot_every must be at least 1")

        if self.gqw_max_iter < 1:
            raise ConfigurationError("gqw_max_iter must be at least 1")

        if self.qaoa_max_iter < 1:
            raise ConfigurationError("qaoa_max_iter must be at least 1")

        if self.max_workers < 1:
            raise ConfigurationError("max_workers must be at least 1")

        if self.permutation_sampling_limit < 1:
            raise ConfigurationError("permutation_sampling_limit must be at least 1")

        if self.log_level not in LOG_LEVELS:
            raise ConfigurationError(f"log_level must be one of {', '.join(LOG_LEVELS)}")

    def as_dict(self) -> dict[str, Any]:
        """Return configuration as a JSON-ready dictionary."""
        return {
            "spectrum_max_qubits": self.spectrum_max_qubits,
            "reference_max_qubits": self.reference_max_qubits,
            "rank_tolerance": self.rank_tolerance,
            "display_threshold": self.display_threshold,
            "top_fraction": self.top_fraction,
            "tracked_ranks": self.tracked_ranks,
            "xy_inner_trotter": self.xy_inner_trotter,
            "default_slices": self.default_slices,
            "snapshot_every": self.snapshot_every,
            "gqw_max_iter": self.gqw_max_iter,
            "qaoa_max_iter": self.qaoa_max_iter,
            "max_workers": self.max_workers,
            "permutation_sampling_limit": self.permutation_sampling_limit,
            "log_level": self.log_level,
        }
