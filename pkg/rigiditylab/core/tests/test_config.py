"""Tests for configuration getters."""
import io
import logging

import pytest

from rigiditylab.core.config import (
    ConfigError,
    GenericityConfig,
    LoggingConfig,
    OracleConfig,
    validate_required_config,
)
from rigiditylab.core.exceptions import BaseRigidityError, ConfigurationError
from rigiditylab.core.logging_config import get_logger, setup_logging


class TestGenericityConfig:
    """Tests for GenericityConfig."""

    def test_defaults(self):
        """Test the documented defaults."""
        assert GenericityConfig.get_seed() == 0
        assert GenericityConfig.get_bound() == 10**6
        assert GenericityConfig.get_retries() == 3
        assert GenericityConfig.get_skew_bound() == 10

    def test_seed_from_environment(self, monkeypatch):
        """Test RIGIDITYLAB_SEED changes the default seed."""
        monkeypatch.setenv("RIGIDITYLAB_SEED", "42")
        assert GenericityConfig.get_seed() == 42

    def test_negative_seed_rejected(self, monkeypatch):
        """Test a negative seed is a configuration error."""
        monkeypatch.setenv("RIGIDITYLAB_SEED", "-1")
        with pytest.raises(ConfigError):
            GenericityConfig.get_seed()

    def test_small_bound_rejected(self, monkeypatch):
        """Test bounds below 2 are rejected."""
        monkeypatch.setenv("RIGIDITYLAB_BOUND", "1")
        with pytest.raises(ConfigError):
            GenericityConfig.get_bound()

    def test_errors_share_the_base_exception(self, monkeypatch):
        """Test configuration errors are caught as BaseRigidityError."""
        monkeypatch.setenv("RIGIDITYLAB_SKEW_BOUND", "1")
        with pytest.raises(ConfigurationError):
            GenericityConfig.get_skew_bound()
        assert issubclass(ConfigError, BaseRigidityError)


class TestOracleConfig:
    """Tests for OracleConfig."""

    def test_defaults(self):
        """Test the documented oracle defaults."""
        assert OracleConfig.get_starts() == 2000
        assert OracleConfig.get_dedup_tol() == pytest.approx(1e-4)
        assert OracleConfig.get_residual_tol() == pytest.approx(1e-8)

    def test_nonpositive_tolerance_rejected(self, monkeypatch):
        """Test a zero dedup tolerance is rejected."""
        monkeypatch.setenv("RIGIDITYLAB_DEDUP_TOL", "0")
        with pytest.raises(ConfigError):
            OracleConfig.get_dedup_tol()


class TestValidateRequiredConfig:
    """Tests for validate_required_config."""

    def test_valid_configuration(self):
        """Test defaults pass validation."""
        validate_required_config()

    def test_collects_every_error(self, monkeypatch):
        """Test all broken settings are reported together."""
        monkeypatch.setenv("RIGIDITYLAB_RETRIES", "0")
        monkeypatch.setenv("RIGIDITYLAB_STARTS", "0")
        with pytest.raises(ConfigError) as excinfo:
            validate_required_config()
        assert "RIGIDITYLAB_RETRIES" in str(excinfo.value)
        assert "RIGIDITYLAB_STARTS" in str(excinfo.value)


class TestLogging:
    """Tests for logging setup."""

    def test_level_from_config(self, monkeypatch):
        """Test the configured level reaches the package logger."""
        monkeypatch.setenv("RIGIDITYLAB_LOG_LEVEL", "DEBUG")
        setup_logging(level=LoggingConfig.get_level(), use_colors=False, stream=io.StringIO())
        assert logging.getLogger("rigiditylab").level == logging.DEBUG

    def test_records_go_to_stream(self):
        """Test records land on the given stream and a second setup replaces the handler."""
        first, second = io.StringIO(), io.StringIO()
        setup_logging(level="INFO", use_colors=True, stream=first)
        setup_logging(level="INFO", use_colors=True, stream=second)
        get_logger("rigiditylab.test").info("stress rank %d", 3)
        assert first.getvalue() == ""
        assert second.getvalue() == "INFO rigiditylab.test: stress rank 3\n"
        assert len(logging.getLogger("rigiditylab").handlers) == 1

    def test_get_logger(self):
        """Test get_logger returns a named logger."""
        assert get_logger("rigiditylab.test").name == "rigiditylab.test"
