"""Exact coefficient forms and their zero test."""

from .forms import (
    NONZERO,
    ZERO,
    CoeffAtom,
    CoefficientForm,
    VerdictKind,
    ZeroVerdict,
    cf_canonicalize,
    cf_is_zero,
    cf_scale,
    cf_sum,
    cf_to_series,
    common_modulus,
    form_denominator,
    rational_lcm,
    refine_signature,
    series_to_form,
    signature_series,
)
from .extraction import extract_exact, solve_indices, term_signature

__all__ = [
    "NONZERO",
    "ZERO",
    "CoeffAtom",
    "CoefficientForm",
    "VerdictKind",
    "ZeroVerdict",
    "cf_canonicalize",
    "cf_is_zero",
    "cf_scale",
    "cf_sum",
    "cf_to_series",
    "common_modulus",
    "form_denominator",
    "rational_lcm",
    "refine_signature",
    "series_to_form",
    "signature_series",
    "extract_exact",
    "solve_indices",
    "term_signature",
]
