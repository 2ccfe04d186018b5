"""Integration tests for Lie GCS."""
