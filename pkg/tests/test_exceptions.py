"""Tests for custom exceptions."""

import pytest

from samba_gqw import (
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


class TestExceptions:
    """Tests for exception hierarchy and behavior."""

    def test_base_exception(self):
        """Test base exception."""
        exc = SambaGQWException("Base error")
        assert str(exc) == "Base error"
        assert isinstance(exc, Exception)
        assert exc.exit_code == 3

    def test_usage_exit_codes(self):
        """Test configuration and usage errors map to exit code 2."""
        assert ConfigurationError("bad env").exit_code == 2
        assert UsageError("bad flag").exit_code == 2

    def test_validation_family(self):
        """Test validation subclasses."""
        for cls in (DimensionMismatchError, DegenerateSpectrumError):
            exc = cls("failed")
            assert isinstance(exc, ValidationError)
            assert isinstance(exc, SambaGQWException)
            assert exc.exit_code == 3

    def test_qubit_limit_error(self):
        """Test qubit limit error carries n and the cap."""
        exc = QubitLimitError("n=16 exceeds cap 14", n=16, cap=14)

        assert isinstance(exc, ValidationError)
        assert exc.n == 16
        assert exc.cap == 14
        assert "14" in str(exc)

    @pytest.mark.parametrize(
        "cls",
        [SamplingError, ScheduleError, EvolutionError, OptimizationError, CircuitExportError],
    )
    def test_pipeline_errors(self, cls):
        """Test pipeline stage errors share the root."""
        exc = cls("stage failed")
        assert isinstance(exc, SambaGQWException)
        assert str(exc) == "stage failed"

    def test_instance_io_error(self):
        """Test instance I/O error with and without a path."""
        exc = InstanceIOError("cannot read", path="/tmp/x.json")
        assert exc.path == "/tmp/x.json"
        assert InstanceIOError("cannot read").path is None
