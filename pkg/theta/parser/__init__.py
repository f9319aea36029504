"""Text formats: identities, shifts, relations, candidates."""

from .formatter import (
    format_form,
    format_identity,
    format_modulus,
    format_monomial,
    format_rational,
    format_relation_ratio,
    format_symbol,
    format_term,
)
from .lexer import Token, TokenKind, tokenize
from .parser import (
    parse_candidates,
    parse_identity,
    parse_relations,
    parse_shifts,
    parse_term,
    parse_vector,
    parse_vector_list,
)

__all__ = [
    "format_form",
    "format_identity",
    "format_modulus",
    "format_monomial",
    "format_rational",
    "format_relation_ratio",
    "format_symbol",
    "format_term",
    "Token",
    "TokenKind",
    "tokenize",
    "parse_candidates",
    "parse_identity",
    "parse_relations",
    "parse_shifts",
    "parse_term",
    "parse_vector",
    "parse_vector_list",
]
