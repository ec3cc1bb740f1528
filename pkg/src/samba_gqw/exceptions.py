"""Custom exceptions for samba_gqw."""


class SambaGQWException(Exception):
    """Base exception for all samba_gqw exceptions."""

    exit_code = 3


class ConfigurationError(SambaGQWException):
    """Raised when configuration is invalid."""

    exit_code = 2


class UsageError(SambaGQWException):
    """Raised when command-line parameters are invalid."""

    exit_code = 2


class ValidationError(SambaGQWException):
    """Raised when data validation fails."""


class DimensionMismatchError(ValidationError):
    """Raised when operands disagree on the number of variables."""


class DegenerateSpectrumError(ValidationError):
    """Raised when a ratio needs C_max > C_min but the spectrum is constant."""


class QubitLimitError(ValidationError):
    """Raised when a dense operation is requested above its qubit cap."""

    def __init__(self, message: str, n: int, cap: int):
        super().__init__(message)
        self.n = n
        self.cap = cap


class SamplingError(SambaGQWException):
    """Raised when the gap sampler cannot run."""


class ScheduleError(SambaGQWException):
    """Raised when a schedule or layer plan cannot be built."""


class EvolutionError(SambaGQWException):
    """Raised when state evolution fails."""


class OptimizationError(SambaGQWException):
    """Raised when parameter tuning fails."""


class CircuitExportError(SambaGQWException):
    """Raised when a layer plan cannot be lowered to a circuit."""


class InstanceIOError(SambaGQWException):
    """Raised when reading or writing instance and schedule files fails."""

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message)
        self.path = path
