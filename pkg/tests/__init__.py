"""Tests for Lie GCS."""
