"""Exact-arithmetic engine for generalized complex and generalized Kähler
structures on four-dimensional Lie algebras."""

__version__ = "0.1.0"
__author__ = "Lie GCS Team"
