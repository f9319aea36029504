"""Shared fixtures: golden identities and their shift files."""

from __future__ import annotations
from pathlib import Path

import pytest

from services.utils import get_identities_dir
from theta.parser import parse_identity, parse_shifts

# name -> expected |Pi_W| with the shipped shifts
GOLDEN_PROVED = {
    "ideab": 2,
    "bailey": 4,
    "extended_riemann": 16,
    "chu": 4,
    "riemann_addition": 16,
    "whittaker_watson": 32,
    "whittaker_watson_q2": 32,
    "abc_identity": 4,
}


@pytest.fixture(scope="session")
def identities_dir() -> Path:
    return get_identities_dir({})


def _read(name: str) -> str:
    return (get_identities_dir({}) / name).read_text(encoding="utf-8")


def load_identity(name: str):
    return parse_identity(_read(f"{name}.theta"))


def load_shifts(name: str):
    path = get_identities_dir({}) / f"{name}.shifts"
    return parse_shifts(path.read_text(encoding="utf-8")) if path.exists() else None


@pytest.fixture
def golden():
    """Callable (name) -> (identity, shifts or None)."""
    def _load(name: str):
        return load_identity(name), load_shifts(name)
    return _load
