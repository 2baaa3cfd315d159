"""Tests for shared types and utilities."""
