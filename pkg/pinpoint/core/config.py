import sys
from typing import Literal
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache
import logging


class ReasonerConfig(BaseSettings):
    node_budget: int = Field(default=1_000_000, ge=1)  # tableau nodes per entailment check
    context_budget: int = Field(default=20_000, ge=1)  # saturation contexts per goal
    step_budget: int = Field(default=2_000_000, ge=1)  # recorded inference steps per goal

    model_config = SettingsConfigDict(
        env_prefix="PINPOINT_REASONER__",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        validate_default=True
    )


class Settings(BaseSettings):
    project_name: str = "ALC Justification Pinpointing"
    project_description: str = "Core, union and optimal repairs of ALC justifications"
    project_version: str = "1.0.0"
    log_level: str = "WARNING"

    # Reasoner budgets
    reasoner: ReasonerConfig = ReasonerConfig()

    # Pinpointing
    brute_force_cap: int = Field(default=20, ge=0)
    mus_exhaustive_threshold: int = Field(default=20, ge=0)
    sat_backend: Literal["dpll", "pysat"] = "dpll"
    pysat_solver: str = "g3"

    # Harness
    bench_workers: int = Field(default=1, ge=1)
    generator_concept_names: int = Field(default=8, ge=1)
    generator_role_names: int = Field(default=3, ge=1)
    model_check_domain: int = Field(default=3, ge=1)

    model_config = SettingsConfigDict(
        env_prefix="PINPOINT_",
        env_nested_delimiter="__",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        validate_default=True
    )


logger = logging.getLogger(__name__)


@lru_cache
def get_settings() -> Settings:
    try:
        return Settings()
    except Exception as e:
        logger.error(f"Fatal error loading settings: {str(e)}")
        logger.error("Check the PINPOINT_* environment variables or your .env file.")
        sys.exit(1)


settings = get_settings()

# Setup logging
logging.basicConfig(level=getattr(logging, settings.log_level.upper(), logging.WARNING))

logger.debug("Settings loaded:")
logger.debug(f"Node budget: {settings.reasoner.node_budget}")
logger.debug(f"Context budget: {settings.reasoner.context_budget}")
logger.debug(f"SAT backend: {settings.sat_backend}")
