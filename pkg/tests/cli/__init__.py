"""Tests for file formats, the corpus report and the command line."""
