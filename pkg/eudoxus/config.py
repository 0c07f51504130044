"""Configuration management using Pydantic Settings."""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class ArithmeticSettings(BaseSettings):
    """Budgets for the real-number engine."""

    fuel: int = Field(
        default=64,
        ge=1,
        le=4096,
        description="Maximum doublings explored by sign and integer-part searches",
    )
    digits: int = Field(default=12, ge=0, description="Default number of decimal digits")
    max_digits: int = Field(default=1000, ge=1, description="Largest accepted digit request")
    memo_max_entries: int | None = Field(
        default=None,
        ge=16,
        description="Per-node memo cap; largest arguments are evicted first. Unbounded if unset",
    )
    defect_range: int = Field(
        default=100,
        ge=1,
        le=2000,
        description="Default |a|, |b| range scanned by the defect command",
    )

    model_config = SettingsConfigDict(
        env_prefix="EUDOXUS_ARITH_",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


class ParserSettings(BaseSettings):
    """Limits for the expression parser."""

    max_depth: int = Field(default=64, ge=1, le=128, description="Maximum expression tree depth")
    max_input_bytes: int = Field(
        default=65536, ge=1, description="Maximum UTF-8 size of one expression"
    )

    model_config = SettingsConfigDict(
        env_prefix="EUDOXUS_PARSER_",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


class LocalizationSettings(BaseSettings):
    """Defaults for p-adic work."""

    precision: int = Field(default=8, ge=1, le=512, description="Digits per prime")
    slack: int = Field(
        default=0,
        ge=0,
        le=64,
        description="Denominator exponent tolerated when reading a perturbed action",
    )

    model_config = SettingsConfigDict(
        env_prefix="EUDOXUS_PADIC_",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


class AppSettings(BaseSettings):
    """Main application settings that aggregates all configuration."""

    model_config = SettingsConfigDict(
        env_prefix="EUDOXUS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        env_nested_delimiter="__",
    )

    app_name: str = Field(default="Eudoxus", description="Application name")
    app_version: str = Field(default="1.0.0", description="Application version")
    log_level: str = Field(
        default="WARNING", description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)"
    )

    arithmetic: ArithmeticSettings = Field(default_factory=ArithmeticSettings)
    parser: ParserSettings = Field(default_factory=ParserSettings)
    localization: LocalizationSettings = Field(default_factory=LocalizationSettings)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level is one of the allowed values."""
        allowed_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in allowed_levels:
            raise ValueError(f"Log level must be one of {allowed_levels}, got '{v}'")
        return v_upper


_settings: AppSettings | None = None


def get_settings() -> AppSettings:
    """
    Get the global settings instance.

    Settings are loaded once and reused; nothing is required from the environment.

    Returns:
        AppSettings: The application settings instance

    Raises:
        ValidationError: If an environment override is invalid
    """
    global _settings
    if _settings is None:
        _settings = AppSettings()
    return _settings


def reset_settings() -> None:
    """
    Reset the global settings instance.

    Used by tests to reload settings with different environment variables.
    """
    global _settings
    _settings = None
