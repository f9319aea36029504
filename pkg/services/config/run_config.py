"""
Run Configuration
=================

Settings for one command-line run.

This module provides:
- RunConfig: order, shifts file, output format, mode override, export paths
- OutputFormat / ModeOverride enums
- resolve_run_config: flag > environment variable > default

Environment variables:
- THETA_ORDER: default truncation order (positive integer, default 100)
- THETA_OUTPUT: "text" or "json"
- THETA_DATA_DIR: golden identity directory (see services/utils/path_utils.py)

Invalid environment values are ignored with a warning.

Related Files:
- app.py: builds the config from parsed arguments
- theta/cli/commands.py: consumes it
"""

from __future__ import annotations
import logging
import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Mapping, Optional

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 100


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"


class ModeOverride(Enum):
    EXACT = "exact"
    SERIES = "series"


@dataclass(frozen=True)
class RunConfig:
    order: int = DEFAULT_ORDER
    shifts: Optional[Path] = None
    output: OutputFormat = OutputFormat.TEXT
    mode_override: Optional[ModeOverride] = None
    out_path: Optional[Path] = None
    xlsx_path: Optional[Path] = None
    verbose: bool = False

    def __post_init__(self):
        if int(self.order) < 1:
            raise ValueError(f"order must be at least 1, got {self.order}")

    @property
    def json(self) -> bool:
        return self.output is OutputFormat.JSON


# ============================================================================
# ENVIRONMENT
# ============================================================================

def _env_order(env: Mapping[str, str], default: int = DEFAULT_ORDER) -> int:
    raw = env.get("THETA_ORDER")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        logger.warning("ignoring THETA_ORDER=%r (expected a positive integer)", raw)
        return default
    return value


def _env_output(env: Mapping[str, str]) -> OutputFormat:
    raw = env.get("THETA_OUTPUT")
    if raw is None:
        return OutputFormat.TEXT
    try:
        return OutputFormat(raw.strip().lower())
    except ValueError:
        logger.warning("ignoring THETA_OUTPUT=%r (expected text or json)", raw)
        return OutputFormat.TEXT


def resolve_run_config(
    order: Optional[int] = None,
    shifts: Optional[str] = None,
    json_output: bool = False,
    mode: Optional[str] = None,
    out: Optional[str] = None,
    xlsx: Optional[str] = None,
    verbose: bool = False,
    env: Optional[Mapping[str, str]] = None,
    default_order: int = DEFAULT_ORDER,
) -> RunConfig:
    """
    Combine command-line values with the environment.

    Raises:
        ValueError: order < 1 or an unknown mode given on the command line
    """
    env = os.environ if env is None else env
    return RunConfig(
        order=order if order is not None else _env_order(env, default_order),
        shifts=Path(shifts) if shifts else None,
        output=OutputFormat.JSON if json_output else _env_output(env),
        mode_override=ModeOverride(mode) if mode else None,
        out_path=Path(out) if out else None,
        xlsx_path=Path(xlsx) if xlsx else None,
        verbose=verbose,
    )
