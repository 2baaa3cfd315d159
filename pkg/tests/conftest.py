"""Shared fixtures: the bundled cities-and-streets database and its updates."""

from pathlib import Path

import pytest

from cli.corpus import DATA_DIR, PaperFixtures, load_paper_fixtures
from engine import BoundConfig, Database
from logic import Signature


@pytest.fixture(scope="session")
def paper() -> PaperFixtures:
    """Fixtures in paper mode, loaded once per session."""
    return load_paper_fixtures()


@pytest.fixture
def d0(paper: PaperFixtures) -> Database:
    return paper.d0


@pytest.fixture
def sig(d0: Database) -> Signature:
    return d0.sig


@pytest.fixture
def cfg() -> BoundConfig:
    return BoundConfig()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR
