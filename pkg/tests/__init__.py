"""Semantic informativity test suite."""
