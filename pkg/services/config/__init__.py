"""Run configuration."""

from .run_config import DEFAULT_ORDER, ModeOverride, OutputFormat, RunConfig, resolve_run_config

__all__ = ["DEFAULT_ORDER", "ModeOverride", "OutputFormat", "RunConfig", "resolve_run_config"]
