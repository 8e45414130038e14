# src/pgl3/core/config.py
from pathlib import Path
from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


BASE_DIR = Path(__file__).resolve().parent.parent.parent.parent


class Settings(BaseSettings):
    POISSON_CONSTANT: int = Field(2, ge=1, le=2)

    QUIVER_SIZE_BOUND: int = 16
    SEARCH_STATE_CAP: int = 1_000_000
    FLIP_GRAPH_CAP: int = 10_000

    RNG_SEED: int = 20040518
    JOBS: int = Field(1, ge=1)
    TOLERANCE: float = 1e-9

    POSITIVITY_SAMPLES: int = 100
    POSITIVITY_FACTOR_DEGREE: int = 3

    QUANTUM_ORDERS: List[int] = [5, 7]
    QUANTUM_TRIALS: int = 20
    REPRESENTATION_CAP: int = 4096
    CONDITION_CAP: float = 1e8

    SVG_DIGITS: int = 12
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_file=(BASE_DIR / ".env"), env_file_encoding="utf-8", extra="ignore"
    )

    def echo(self) -> dict:
        """Settings as they are embedded into every artifact."""
        return self.model_dump(mode="json")


settings = Settings()
