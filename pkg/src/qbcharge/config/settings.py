"""qbcharge process settings."""

import logging
from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-wide settings loaded from QBCHARGE_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="QBCHARGE_",
        env_file=".env",
        env_ignore_empty=True,
        extra="ignore",
    )

    project_name: str = "qbcharge"
    debug: bool = False

    # Execution Settings
    sweep_workers: int = Field(default=1, ge=1)
    eigensolver: Literal["lapack", "jacobi"] = "lapack"

    # Logging Settings
    log_level: str = "INFO"

    @field_validator("log_level", mode="before")
    @classmethod
    def normalise_log_level(cls, v: str) -> str:
        level = str(v).strip().upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"Unknown log level '{v}'")
        return level


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
