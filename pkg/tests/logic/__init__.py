"""Tests for syntax, parsing, printing and semantics."""
