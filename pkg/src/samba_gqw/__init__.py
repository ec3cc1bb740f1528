"""Sampling-based guided quantum walks for binary optimization, simulated on state vectors."""

__version__ = "0.1.0"

from samba_gqw.config import SambaConfig  # noqa: E402
from samba_gqw.exceptions import (  # noqa: E402
    CircuitExportError,
    ConfigurationError,
    DegenerateSpectrumError,
    DimensionMismatchError,
    EvolutionError,
    InstanceIOError,
    OptimizationError,
    QubitLimitError,
    SambaGQWException,
    SamplingError,
    ScheduleError,
    UsageError,
    ValidationError,
)
from samba_gqw.hubo import Polynomial, Spectrum, enumerate_spectrum  # noqa: E402
from samba_gqw.manager import RunResult, SambaManager  # noqa: E402
from samba_gqw.mixers import MixerSpec  # noqa: E402
from samba_gqw.models import BitString, MixerKind, ProblemFamily, StateVector  # noqa: E402
from samba_gqw.schedule import LayerPlan, Schedule  # noqa: E402

__all__ = [
    "BitString",
    "CircuitExportError",
    "ConfigurationError",
    "DegenerateSpectrumError",
    "DimensionMismatchError",
    "EvolutionError",
    "InstanceIOError",
    "LayerPlan",
    "MixerKind",
    "MixerSpec",
    "OptimizationError",
    "Polynomial",
    "ProblemFamily",
    "QubitLimitError",
    "RunResult",
    "SambaConfig",
    "SambaGQWException",
    "SamplingError",
    "ScheduleError",
    "Schedule",
    "Spectrum",
    "StateVector",
    "UsageError",
    "ValidationError",
    "enumerate_spectrum",
]
