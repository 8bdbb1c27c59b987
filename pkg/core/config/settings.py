"""
Configuration management using Pydantic Settings.

Caps, budgets and defaults for every pipeline stage. Values come from
``GIVENTHAT_*`` environment variables or a ``.env`` file; command-line flags
take precedence through :func:`override_settings`.

Example:
    >>> from core.config import get_settings
    >>>
    >>> settings = get_settings()
    >>> settings.bdd_node_cap
    4194304
"""

from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# ==============================================================================
# Validators
# ==============================================================================


class LogLevelValidator:
    """Validates logging level configuration values."""

    ALLOWED_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}

    @classmethod
    def validate(cls, log_level: str) -> str:
        """Validate log level value.

        Args:
            log_level: Log level to validate

        Returns:
            Uppercase log level

        Raises:
            ValueError: If log level is not allowed
        """
        level_upper = log_level.upper()
        if level_upper not in cls.ALLOWED_LEVELS:
            raise ValueError(f"Log level must be one of {cls.ALLOWED_LEVELS}, got: {log_level}")
        return level_upper


# ==============================================================================
# Settings
# ==============================================================================


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables.

    Configuration Groups:
        - Boolean functions: BDD node cap
        - Automata: translator state cap, mark cap, complementation budget
        - Knowledge seeking: first-steps depth and frontier cap
        - Bench: timeout and worker count
        - Logging: level and format
    """

    # ==========================================================================
    # Boolean functions
    # ==========================================================================

    bdd_node_cap: int = Field(
        default=2**22,
        ge=16,
        description="Maximum number of BDD nodes per manager",
    )

    # ==========================================================================
    # Automata
    # ==========================================================================

    translate_state_cap: int = Field(
        default=2**16,
        ge=1,
        description="Maximum number of states produced by the LTL translator",
    )
    max_marks: int = Field(
        default=32,
        ge=1,
        le=32,
        description="Maximum number of acceptance marks of an automaton",
    )
    complement_state_cap: int = Field(
        default=10**5,
        ge=1,
        description="State budget of generic (rank-based) complementation",
    )

    # ==========================================================================
    # Knowledge seeking
    # ==========================================================================

    first_steps_depth: int = Field(
        default=2,
        ge=1,
        le=16,
        description="Depth explored by the first-steps seeker",
    )
    frontier_cap: int = Field(
        default=10**4,
        ge=1,
        description="Per-depth BFS frontier size above which a depth is skipped",
    )

    # ==========================================================================
    # Bench
    # ==========================================================================

    bench_timeout_ms: int = Field(
        default=10_000,
        ge=0,
        description="Per problem-and-strategy timeout in milliseconds (0 disables)",
    )
    bench_workers: int = Field(
        default=1,
        ge=1,
        le=64,
        description="Number of concurrent bench workers",
    )

    # ==========================================================================
    # Logging Configuration
    # ==========================================================================

    log_level: str = Field(
        default="WARNING",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
    )
    log_json: bool = Field(
        default=False,
        description="Output logs in JSON format",
    )

    model_config = SettingsConfigDict(
        env_prefix="GIVENTHAT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        return LogLevelValidator.validate(v)


# ==============================================================================
# Settings Loader (Singleton Pattern)
# ==============================================================================


class SettingsLoader:
    """Manages the global settings instance."""

    _instance: Settings | None = None

    @classmethod
    def get(cls) -> Settings:
        if cls._instance is None:
            cls._instance = Settings()
        return cls._instance

    @classmethod
    def set(cls, settings: Settings) -> None:
        cls._instance = settings

    @classmethod
    def reset(cls) -> None:
        cls._instance = None

    @classmethod
    def is_loaded(cls) -> bool:
        return cls._instance is not None

    @classmethod
    def reload(cls) -> Settings:
        """Force re-reading the environment."""
        cls._instance = None
        return cls.get()


# ==============================================================================
# Settings Builder (For Testing)
# ==============================================================================


class SettingsBuilder:
    """Fluent builder for Settings instances with custom values.

    Example:
        >>> settings = (SettingsBuilder()
        ...     .with_translate_state_cap(8)
        ...     .with_complement_state_cap(50)
        ...     .build())
    """

    def __init__(self) -> None:
        self._values: dict[str, Any] = {}

    def with_translate_state_cap(self, cap: int) -> "SettingsBuilder":
        self._values["translate_state_cap"] = cap
        return self

    def with_complement_state_cap(self, cap: int) -> "SettingsBuilder":
        self._values["complement_state_cap"] = cap
        return self

    def build(self) -> Settings:
        return Settings(**self._values)


# ==============================================================================
# Public API
# ==============================================================================


def get_settings() -> Settings:
    """Get the global settings instance (created lazily from the environment)."""
    return SettingsLoader.get()


def reset_settings() -> None:
    """Drop the global settings instance; the next access re-reads the environment."""
    SettingsLoader.reset()


def reload_settings() -> Settings:
    return SettingsLoader.reload()


def override_settings(**values: Any) -> Settings:
    """Replace the global settings with a copy carrying ``values``.

    ``None`` values are ignored so optional CLI flags can be passed through
    unconditionally.

    Example:
        >>> override_settings(translate_state_cap=128, bdd_node_cap=None)
    """
    updates = {k: v for k, v in values.items() if v is not None}
    current = SettingsLoader.get()
    merged = Settings(**{**current.model_dump(), **updates})
    SettingsLoader.set(merged)
    return merged
