"""Command-line front end."""

from .commands import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_USAGE,
    EXIT_VERIFIED_TO_ORDER,
    build_parser,
    cmd_discover,
    cmd_expand,
    cmd_explain,
    cmd_pi,
    cmd_relations,
    cmd_verify,
    exit_code_for,
    main,
)

__all__ = [
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_PARSE_ERROR",
    "EXIT_USAGE",
    "EXIT_VERIFIED_TO_ORDER",
    "build_parser",
    "cmd_discover",
    "cmd_expand",
    "cmd_explain",
    "cmd_pi",
    "cmd_relations",
    "cmd_verify",
    "exit_code_for",
    "main",
]
