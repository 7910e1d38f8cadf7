"""Configuration settings for the split cubic fourfold toolkit."""
from __future__ import annotations

from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_GOLDEN_DIR = (
    Path(__file__).resolve().parent.parent / "infrastructure" / "golden" / "data"
)


class GeometrySettings(BaseSettings):
    """Plane enumeration and automorphism closure settings."""

    model_config = SettingsConfigDict(env_prefix="SPLITCUBIC_", extra="ignore")

    closure_budget: int = Field(
        default=10000, description="Maximum group order explored by generator closure"
    )
    strict_membership: bool = Field(
        default=False,
        description="Re-verify that both planes lie on the hypersurface before intersecting",
    )

    @field_validator("closure_budget")
    @classmethod
    def validate_closure_budget(cls, v: int) -> int:
        if v < 1:
            raise ValueError("Closure budget must be positive")
        return v


class LatticeSettings(BaseSettings):
    """Exact linear algebra settings."""

    model_config = SettingsConfigDict(env_prefix="SPLITCUBIC_", extra="ignore")

    verify_postconditions: bool = Field(
        default=False,
        description="Check SNF and closure postconditions on every call",
    )


class AppSettings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_prefix="SPLITCUBIC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # App info
    app_name: str = Field(default="splitcubic", description="Application name")
    app_version: str = Field(default="0.1.0", description="Application version")
    debug: bool = Field(default=False, description="Debug mode")
    environment: str = Field(default="development", description="Environment")

    # Output
    log_format: str = Field(default="console", description="console or json log lines")
    default_format: str = Field(default="plain", description="Default report format")
    golden_dir: Path = Field(
        default=DEFAULT_GOLDEN_DIR, description="Directory holding golden data files"
    )

    # Nested settings
    geometry: GeometrySettings = Field(default_factory=GeometrySettings)
    lattice: LatticeSettings = Field(default_factory=LatticeSettings)

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        v = v.lower()
        if v not in {"development", "test", "production"}:
            raise ValueError("Environment must be development, test or production")
        return v

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        v = v.lower()
        if v not in {"console", "json"}:
            raise ValueError("Log format must be console or json")
        return v

    @field_validator("default_format")
    @classmethod
    def validate_default_format(cls, v: str) -> str:
        v = v.lower()
        if v not in {"plain", "json", "csv"}:
            raise ValueError("Report format must be plain, json or csv")
        return v

    @property
    def log_level(self) -> str:
        """Get appropriate log level."""
        return "DEBUG" if self.debug else "INFO"

    @property
    def postconditions_enabled(self) -> bool:
        """Postcondition checks run in the test environment or when requested."""
        return self.lattice.verify_postconditions or self.environment == "test"


# Global settings instance
settings = AppSettings()
