"""Configuration management for the application."""
import logging

from decouple import config

from rigiditylab.core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)


class ConfigError(ConfigurationError):
    """Raised when a RIGIDITYLAB_* value is missing or invalid."""
    pass


class GenericityConfig:
    """Random-sampling knobs that stand in for generic configurations."""

    @staticmethod
    def get_seed() -> int:
        """Get the default seed (RIGIDITYLAB_SEED overrides the --seed default only)."""
        seed = config("RIGIDITYLAB_SEED", default=0, cast=int)
        if seed < 0:
            raise ConfigError("RIGIDITYLAB_SEED must be non-negative")
        return seed

    @staticmethod
    def get_bound() -> int:
        """Get the coordinate bound for generic sampling."""
        bound = config("RIGIDITYLAB_BOUND", default=10**6, cast=int)
        if bound < 2:
            raise ConfigError("RIGIDITYLAB_BOUND must be at least 2")
        return bound

    @staticmethod
    def get_retries() -> int:
        """Get the number of fresh samples tried before a negative answer."""
        retries = config("RIGIDITYLAB_RETRIES", default=3, cast=int)
        if retries < 1:
            raise ConfigError("RIGIDITYLAB_RETRIES must be at least 1")
        return retries

    @staticmethod
    def get_skew_bound() -> int:
        """Get the entry bound for random skew matrices fed to the Cayley transform."""
        bound = config("RIGIDITYLAB_SKEW_BOUND", default=10, cast=int)
        if bound < 2:
            raise ConfigError("RIGIDITYLAB_SKEW_BOUND must be at least 2")
        return bound


class OracleConfig:
    """Realization enumeration configuration."""

    @staticmethod
    def get_starts() -> int:
        """Get the number of multi-start solver runs."""
        starts = config("RIGIDITYLAB_STARTS", default=2000, cast=int)
        if starts < 1:
            raise ConfigError("RIGIDITYLAB_STARTS must be positive")
        return starts

    @staticmethod
    def get_dedup_tol() -> float:
        """Get the normalized g-matrix distance below which solutions merge."""
        tol = config("RIGIDITYLAB_DEDUP_TOL", default=1e-4, cast=float)
        if tol <= 0:
            raise ConfigError("RIGIDITYLAB_DEDUP_TOL must be positive")
        return tol

    @staticmethod
    def get_residual_tol() -> float:
        """Get the largest relative residual accepted as a converged solution."""
        tol = config("RIGIDITYLAB_RESIDUAL_TOL", default=1e-8, cast=float)
        if tol <= 0:
            raise ConfigError("RIGIDITYLAB_RESIDUAL_TOL must be positive")
        return tol


class HyperbolicConfig:
    """Hyperbolic transfer configuration."""

    @staticmethod
    def get_rotation_tol() -> float:
        """Get the measurement residual allowed after the float-mode rotation."""
        tol = config("RIGIDITYLAB_ROTATION_TOL", default=1e-9, cast=float)
        if tol <= 0:
            raise ConfigError("RIGIDITYLAB_ROTATION_TOL must be positive")
        return tol


class LoggingConfig:
    """Logging configuration."""

    @staticmethod
    def get_level() -> str:
        """Get the log level name."""
        return config("RIGIDITYLAB_LOG_LEVEL", default="WARNING")

    @staticmethod
    def use_colors() -> bool:
        """Check if colored console output is wanted."""
        return config("RIGIDITYLAB_LOG_COLORS", default=True, cast=bool)


def validate_required_config() -> None:
    """Validate that every configured value is usable."""
    errors = []
    getters = (
        GenericityConfig.get_seed,
        GenericityConfig.get_bound,
        GenericityConfig.get_retries,
        GenericityConfig.get_skew_bound,
        OracleConfig.get_starts,
        OracleConfig.get_dedup_tol,
        OracleConfig.get_residual_tol,
        HyperbolicConfig.get_rotation_tol,
    )
    for getter in getters:
        try:
            getter()
        except (ConfigError, ValueError) as e:
            errors.append(str(e))

    if errors:
        raise ConfigError(f"Configuration errors: {', '.join(errors)}")
