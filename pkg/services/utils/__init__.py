"""Utility functions."""

from .logging_setup import configure_logging
from .path_utils import ensure_dir, get_data_dir, get_identities_dir, get_project_root

__all__ = ["configure_logging", "ensure_dir", "get_data_dir", "get_identities_dir", "get_project_root"]
