"""
Lab configuration management using Pydantic Settings.
"""

from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings as PydanticBaseSettings, SettingsConfigDict


class BoundsConfig(PydanticBaseSettings):
    """Computation bounds."""

    max_order: int = Field(default=4096, ge=2, description="Largest ring order accepted by construct")
    oracle_max_order: int = Field(default=16, ge=2, description="Largest ring order for exhaustive oracles")
    max_ideals: int = Field(default=10**6, ge=1, description="Largest ideal count accepted by enumerate_ideals")
    oracle_pair_limit: int = Field(default=2**16, ge=1, description="Largest |S x R| accepted by the fraction oracle")


class ChecksConfig(PydanticBaseSettings):
    """Axiom and postcondition checking."""

    exhaustive_axiom_order: int = Field(default=64, ge=1, description="Check all triples up to this order")
    axiom_samples: int = Field(default=100_000, ge=1, description="Random triples checked above the exhaustive order")
    seed: int = Field(default=0, description="Seed for sampled axiom checks")
    postconditions: bool = Field(default=True, description="Assert documented postconditions")


class LoggingConfig(PydanticBaseSettings):
    """Structured logging configuration."""

    level: str = Field(default="WARNING", description="Minimum log level")
    format: Literal["console", "json"] = Field(default="console", description="Renderer")

    @field_validator("level", mode="before")
    @classmethod
    def _normalize_level(cls, v):
        """Accept lower-case level names from env and CLI."""
        if v is None or (isinstance(v, str) and v.strip() == ""):
            return "WARNING"
        return str(v).upper()


class LabConfig(PydanticBaseSettings):
    """Main lab configuration."""

    bounds: BoundsConfig = Field(default_factory=BoundsConfig)
    checks: ChecksConfig = Field(default_factory=ChecksConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    model_config = SettingsConfigDict(
        env_prefix="RINGLAB_",
        env_nested_delimiter="__",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
    )

    def override_bounds(self, **bounds: int | None) -> None:
        """Apply CLI bound overrides; None leaves a bound unchanged."""
        for name, value in bounds.items():
            if value is not None:
                setattr(self.bounds, name, value)


# Global configuration instance
config = LabConfig()
