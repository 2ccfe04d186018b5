"""Settings and configuration management for the Lie GCS engine."""

from enum import Enum
from pathlib import Path
from typing import List, Optional, Union

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class OutputFormat(str, Enum):
    """Report rendering mode."""
    TEXT = "text"
    JSON = "json"


class GcsSettings(BaseSettings):
    """Lie GCS configuration settings."""

    # Reproducibility
    gcs_seed: int = Field(
        default=20240917,
        description="Seed for every pseudorandom sweep; recorded in run reports"
    )
    gcs_random_triples: int = Field(
        default=300,
        description="C0-satisfying random triples per algebra in the integrability sweep"
    )
    gcs_random_params: int = Field(
        default=200,
        description="Random Prop 2.1 parameter tuples in the system (S) sweep"
    )
    gcs_lambda_samples: Union[str, List[str]] = Field(
        default_factory=lambda: ["0", "1", "-2/3"],
        description="Comma-separated rational samples for the lambda families"
    )

    # Corpus and output
    gcs_fixtures_dir: Optional[Path] = Field(
        default=None,
        description="Directory overriding the embedded fixture corpus"
    )
    gcs_output_format: OutputFormat = Field(
        default=OutputFormat.TEXT,
        description="Report rendering: text or json"
    )
    gcs_log_level: str = Field(default="INFO", description="Root logging level")
    gcs_max_entry_bits: int = Field(
        default=4096,
        description="Bit length above which rational growth is logged as a warning"
    )
    gcs_workers: int = Field(
        default=1,
        description="Worker processes for fixture suites; 1 runs in-process"
    )

    @field_validator("gcs_lambda_samples", mode="before")
    @classmethod
    def parse_lambda_samples(cls, v):
        """Parse lambda samples from a comma-separated string."""
        if isinstance(v, str):
            return [item.strip() for item in v.split(",") if item.strip()]
        return v

    @field_validator("gcs_log_level", mode="before")
    @classmethod
    def validate_log_level(cls, v):
        """Accept only standard logging level names."""
        level = str(v).upper()
        if level not in _LOG_LEVELS:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("gcs_random_triples", "gcs_random_params", "gcs_workers")
    @classmethod
    def validate_positive(cls, v):
        """Sweep sizes and worker counts must be positive."""
        if v <= 0:
            raise ValueError("Sweep sizes and worker counts must be positive")
        return v

    model_config = {
        "env_prefix": "",
        "case_sensitive": False
    }
