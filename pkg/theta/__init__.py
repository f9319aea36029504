"""Exact verification and discovery of multiple theta function identities."""

__version__ = "1.0.0"
