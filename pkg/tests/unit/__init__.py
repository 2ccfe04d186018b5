"""Unit tests for Lie GCS."""
