"""Pytest configuration and shared fixtures."""

import random

import pytest
from click.testing import CliRunner

from eudoxus.config import reset_settings
from eudoxus.models.cfseq import CFSeq
from eudoxus.services.endo_core import configure_memo


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings and an unbounded memo."""
    for name in ("EUDOXUS_ARITH_FUEL", "EUDOXUS_ARITH_DIGITS", "EUDOXUS_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()
    configure_memo(None)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def sqrt2() -> CFSeq:
    return CFSeq.periodic((1,), (2,))


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
