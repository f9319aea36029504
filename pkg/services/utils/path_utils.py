"""
Path Utilities
==============

Project and data directory resolution.

This module provides:
- Project root directory detection
- Golden identity directory (overridable with THETA_DATA_DIR)
- Directory creation helper

Examples:
    >>> get_project_root()
    PosixPath('/path/to/theta-prover')

    >>> get_identities_dir()
    PosixPath('/path/to/theta-prover/data/identities')

Related Files:
- theta/exporters/excel_exporter.py: ensure_dir for export targets
- tests/conftest.py: loads golden identities from here
"""

from __future__ import annotations
import os
from pathlib import Path
from typing import Mapping, Optional


def get_project_root() -> Path:
    """Directory holding app.py, two levels above this file."""
    return Path(__file__).resolve().parents[2]


def get_data_dir() -> Path:
    return get_project_root() / "data"


def get_identities_dir(env: Optional[Mapping[str, str]] = None) -> Path:
    """
    Directory of golden `.theta`, `.shifts`, `.rel` and `.cand` files.

    THETA_DATA_DIR replaces the default data/identities when set.
    """
    env = os.environ if env is None else env
    override = env.get("THETA_DATA_DIR")
    if override:
        return Path(override).expanduser()
    return get_data_dir() / "identities"


def ensure_dir(path: Path) -> Path:
    """Create path (and parents) if needed; returns it for chaining."""
    path.mkdir(parents=True, exist_ok=True)
    return path
