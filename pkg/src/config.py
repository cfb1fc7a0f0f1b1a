"""
Configuration management for hklab.

Settings are read from environment variables and an optional ``.env`` file.
Compute knobs use the ``HKLAB_`` prefix (``HKLAB_JOBS`` is the default for
``--jobs``); application metadata and logging use ``APP_``.

Responsibility: Centralized configuration
"""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class ComputeConfig(BaseSettings):
    """Bounds and defaults for the exact computations"""

    jobs: int = Field(default=1, description="Worker processes for per-prime / per-e fan-out")
    decimal_digits: int = Field(default=50, description="Digits in approximation columns")

    # Coefficient moduli and exponents must stay in these ranges
    max_modulus: int = Field(default=2**62)
    max_exponent: int = Field(default=2**32 - 1)

    # Largest n the summation oracle accepts
    oracle_max_n: int = Field(default=4096)

    model_config = SettingsConfigDict(
        env_prefix="HKLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    @field_validator("jobs")
    @classmethod
    def validate_jobs(cls, v: int) -> int:
        """At least one worker"""
        if v < 1:
            raise ValueError("jobs must be at least 1")
        return v

    @field_validator("decimal_digits")
    @classmethod
    def validate_digits(cls, v: int) -> int:
        if v < 10:
            raise ValueError("decimal_digits must be at least 10")
        return v


class AppConfig(BaseSettings):
    """Application configuration"""

    # Application metadata
    app_name: str = Field(default="hklab")
    app_version: str = Field(default="1.0.0")

    # Logging
    log_level: str = Field(default="INFO")

    model_config = SettingsConfigDict(
        env_prefix="APP_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v):
        """Accept lowercase level names from the environment"""
        if isinstance(v, str):
            return v.strip().upper()
        return v


class Settings(BaseSettings):
    """
    Global settings container.

    Loads configuration from:
    1. Environment variables
    2. .env file
    3. Default values

    Example:
        settings = Settings()
        settings.compute.jobs        # HKLAB_JOBS or 1

        settings = Settings(compute=ComputeConfig(jobs=4))
    """

    app: AppConfig = Field(default_factory=AppConfig)
    compute: ComputeConfig = Field(default_factory=ComputeConfig)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )


# Global settings instance
settings = Settings()
