"""Runtime settings read from the environment (and a ``.env`` file via python-dotenv)."""

import os
import logging
from typing import Optional

from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

ENV_PREFIX = "INVDIAM_"


class Settings(BaseModel):
    """Validated defaults for solver budgets, guards and logging."""

    budget: Optional[float] = Field(default=None, ge=0, description="Wall-clock budget (s) for exact searches")
    max_edges: int = Field(default=25, ge=1, description="Diameter enumeration edge guard per component")
    oracle_max_edges: int = Field(default=20, ge=1, description="BFS oracle edge guard")
    oracle_max_vertices: int = Field(default=16, ge=1, description="BFS oracle vertex guard")
    chromatic_max_vertices: int = Field(default=20, ge=1, description="Chromatic oracle vertex guard")
    parallel: int = Field(default=1, ge=1, description="Worker processes for diameter chunks")
    seed: int = Field(default=0, description="Seed for randomised commands")
    log_level: str = Field(default="WARNING", description="Logging level name")
    census_path: str = Field(default="data/census.yaml", description="Census file location")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in logging.getLevelNamesMapping():
            raise ValueError(f"Unknown log level: {value}")
        return value

    @staticmethod
    def from_env() -> "Settings":
        """Build settings from ``INVDIAM_*`` environment variables.

        Returns:
            Settings instance; unset variables keep their defaults

        Raises:
            pydantic.ValidationError: If a variable holds an invalid value
        """
        values = {}
        for name in Settings.model_fields:
            raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
            if raw is not None and raw.strip() != "":
                values[name] = raw.strip()
        settings = Settings(**values)
        logger.debug(f"Settings loaded: {settings.model_dump()}")
        return settings


def extended_checks_enabled() -> bool:
    """Long-running regression checks are opt-in via ``INVDIAM_EXTENDED=1``."""
    return os.getenv(f"{ENV_PREFIX}EXTENDED", "0").strip() in ("1", "true", "yes")
