"""Fixtures for end-to-end report tests.

The full report recomputes every bundled case, so it is built once per module.
"""

import pytest

from cli.report import Report, run_paper_report
from shared.types import OpMode


@pytest.fixture(scope="module")
def report() -> Report:
    """Paper-mode report at the default bound."""
    return run_paper_report()


@pytest.fixture(scope="module")
def strict_report() -> Report:
    return run_paper_report(OpMode.strict)
