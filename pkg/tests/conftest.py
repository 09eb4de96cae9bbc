"""Shared fixtures for all tests."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = FIXTURES / "golden"
PROGRAMS = Path(__file__).parent.parent / "programs"


@pytest.fixture(autouse=True)
def _plain_diagnostics(monkeypatch):
    monkeypatch.setenv("STAGEC_COLOR", "0")


@pytest.fixture
def programs_dir() -> Path:
    return PROGRAMS


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture
def write_program(tmp_path):
    """Write `text` to a .2lt file under tmp_path and return its path."""

    def _write(text: str, name: str = "prog.2lt") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
