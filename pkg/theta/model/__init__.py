"""Theta identity domain model."""

from .types import (
    Identity,
    IntVector,
    PochQuotient,
    QMonomial,
    ThetaFactor,
    ThetaTerm,
    identity_denominator,
    term_denominator,
    term_variables,
)
from .pairing import pair_pochhammers
from .validation import ValidationReport, exponent_space, primitive, spans_equal, validate_term

__all__ = [
    "Identity",
    "IntVector",
    "PochQuotient",
    "QMonomial",
    "ThetaFactor",
    "ThetaTerm",
    "identity_denominator",
    "term_denominator",
    "term_variables",
    "pair_pochhammers",
    "ValidationReport",
    "exponent_space",
    "primitive",
    "spans_equal",
    "validate_term",
]
