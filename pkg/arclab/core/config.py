"""
Application configuration management using Pydantic Settings.

This module provides centralized configuration management with:
- Environment variable support (prefix ARCLAB_, e.g. ARCLAB_MAX_Q)
- Type validation
- Defaults sized for desk-scale experiments
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.
    
    Attributes:
        PROJECT_NAME: Display name for the application.
        ENVIRONMENT: Current environment (dev/staging/prod).
        LOG_LEVEL: Explicit log level; derived from ENVIRONMENT when unset.
        MAX_Q: Largest field order field_new accepts.
        LOG_TABLE_MAX_Q: Largest order for which log/antilog tables are built.
        ADD_TABLE_MAX_Q: Largest extension-field order with a full addition table.
        EXHAUSTIVE_BUDGET: Suites enumerate every configuration up to this count.
        SAMPLE_COUNT: Number of seeded-random configurations above the budget.
        DEFAULT_SEED: Seed used whenever the caller does not pass one.
        SEARCH_NODE_BUDGET: Node budget of the arc search.
        SEARCH_TIME_BUDGET: Wall-clock budget of the arc search, in seconds.
        JOBS: Default parallel width.
        LAPLACE_SAMPLES: Random instances drawn by the Laplace suite.
    """
    
    model_config = SettingsConfigDict(
        env_prefix="ARCLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )
    
    # Core Settings
    PROJECT_NAME: str = "arclab"
    ENVIRONMENT: Literal["dev", "staging", "prod"] = "prod"
    LOG_LEVEL: str | None = None
    
    # Field guard and arithmetic tables
    MAX_Q: int = Field(default=2**20, ge=2)
    LOG_TABLE_MAX_Q: int = Field(default=2**16, ge=2)
    ADD_TABLE_MAX_Q: int = Field(default=256, ge=2)
    
    # Identity suites
    EXHAUSTIVE_BUDGET: int = Field(default=10**5, ge=1)
    SAMPLE_COUNT: int = Field(default=1000, ge=1)
    DEFAULT_SEED: int = 1
    LAPLACE_SAMPLES: int = Field(default=10**4, ge=1)
    
    # Search
    SEARCH_NODE_BUDGET: int = Field(default=50_000_000, ge=1)
    SEARCH_TIME_BUDGET: float = Field(default=600.0, gt=0)
    JOBS: int = Field(default=1, ge=1)
    
    @property
    def is_development(self) -> bool:
        """Check if running in development environment."""
        return self.ENVIRONMENT == "dev"


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.
    
    Uses lru_cache so the environment is read once per process;
    tests call get_settings.cache_clear() after patching it.
    
    Returns:
        Settings: The application settings instance.
    """
    return Settings()
