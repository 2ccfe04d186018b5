"""Configuration management for the Lie GCS engine."""

from .settings import GcsSettings, OutputFormat

__all__ = ["GcsSettings", "OutputFormat"]
