"""Tests for pipeline configuration."""

import os
from unittest.mock import patch

import pytest

from samba_gqw import ConfigurationError, SambaConfig


class TestSambaConfig:
    """Tests for SambaConfig class."""

    def test_default_config(self):
        """Test default configuration values."""
        config = SambaConfig()

        assert config.spectrum_max_qubits == 14
        assert config.reference_max_qubits == 12
        assert config.rank_tolerance == 1e-9
        assert config.display_threshold == 1e-3
        assert config.top_fraction == 0.05
        assert config.tracked_ranks == 5
        assert config.xy_inner_trotter == 4
        assert config.default_slices == 8
        assert config.snapshot_every == 1
        assert config.gqw_max_iter == 100
        assert config.qaoa_max_iter == 3000
        assert config.max_workers == 4
        assert config.permutation_sampling_limit == 1 << 20
        assert config.log_level == "INFO"

    def test_custom_config(self):
        """Test custom configuration values."""
        config = SambaConfig(
            spectrum_max_qubits=10,
            reference_max_qubits=8,
            top_fraction=0.1,
            default_slices=16,
            qaoa_max_iter=50,
            max_workers=2,
            log_level="DEBUG",
        )

        assert config.spectrum_max_qubits == 10
        assert config.reference_max_qubits == 8
        assert config.top_fraction == 0.1
        assert config.default_slices == 16
        assert config.qaoa_max_iter == 50
        assert config.max_workers == 2
        assert config.log_level == "DEBUG"

    @patch.dict(os.environ, {
        "SAMBA_SPECTRUM_MAX_QUBITS": "12",
        "SAMBA_REFERENCE_MAX_QUBITS": "10",
        "SAMBA_TOP_FRACTION": "0.2",
        "SAMBA_XY_INNER_TROTTER": "8",
        "SAMBA_GQW_MAX_ITER": "20",
        "SAMBA_MAX_WORKERS": "1",
        "SAMBA_LOG_LEVEL": "warning",
    })
    def test_env_config(self):
        """Test configuration from environment variables."""
        config = SambaConfig()

        assert config.spectrum_max_qubits == 12
        assert config.reference_max_qubits == 10
        assert config.top_fraction == 0.2
        assert config.xy_inner_trotter == 8
        assert config.gqw_max_iter == 20
        assert config.max_workers == 1
        assert config.log_level == "WARNING"

    @patch.dict(os.environ, {"SAMBA_DEFAULT_SLICES": "eight"})
    def test_env_not_an_integer(self):
        """Test a non-numeric integer setting raises ConfigurationError."""
        with pytest.raises(ConfigurationError, match="SAMBA_DEFAULT_SLICES must be an integer"):
            SambaConfig()

    @patch.dict(os.environ, {"SAMBA_TOP_FRACTION": "five percent"})
    def test_env_not_a_number(self):
        """Test a non-numeric float setting raises ConfigurationError."""
        with pytest.raises(ConfigurationError, match="SAMBA_TOP_FRACTION must be a number"):
            SambaConfig()

    def test_validation_errors(self):
        """Test configuration validation errors."""
        with pytest.raises(ConfigurationError, match="spectrum_max_qubits must be at least 1"):
            SambaConfig(spectrum_max_qubits=0)

        with pytest.raises(ConfigurationError, match="reference_max_qubits cannot exceed"):
            SambaConfig(spectrum_max_qubits=8, reference_max_qubits=10)

        with pytest.raises(ConfigurationError, match="rank_tolerance must be in"):
            SambaConfig(rank_tolerance=0.0)

        with pytest.raises(ConfigurationError, match="top_fraction must be in"):
            SambaConfig(top_fraction=1.5)

        with pytest.raises(ConfigurationError, match="display_threshold must be in"):
            SambaConfig(display_threshold=1.0)

        with pytest.raises(ConfigurationError, match="xy_inner_trotter must be at least 1"):
            SambaConfig(xy_inner_trotter=0)

        with pytest.raises(ConfigurationError, match="qaoa_max_iter must be at least 1"):
            SambaConfig(qaoa_max_iter=0)

        with pytest.raises(ConfigurationError, match="max_workers must be at least 1"):
            SambaConfig(max_workers=0)

        with pytest.raises(ConfigurationError, match="log_level must be one of"):
            SambaConfig(log_level="VERBOSE")

    def test_as_dict(self):
        """Test the JSON-ready view covers every field."""
        config = SambaConfig(default_slices=3)

        data = config.as_dict()

        assert data["default_slices"] == 3
        assert data["log_level"] == "INFO"
        assert set(data) == set(config.__dataclass_fields__)
