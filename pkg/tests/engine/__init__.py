"""Tests for databases, operations, updates, entailment and metrics."""
