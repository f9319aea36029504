"""Truncated q-series and the multivariate expansion oracle."""

from .qseries import (
    QSeries,
    euler_expand,
    scaled,
    scaled_cutoff,
    series_add,
    series_inv,
    series_monomial,
    series_mul,
    series_neg,
    series_pow,
    series_zero,
)
from .expansion import (
    LaurentMap,
    expand_identity_residual,
    expand_term,
    expand_terms,
    jtp_expand,
    jtp_window,
)

__all__ = [
    "QSeries",
    "euler_expand",
    "scaled",
    "scaled_cutoff",
    "series_add",
    "series_inv",
    "series_monomial",
    "series_mul",
    "series_neg",
    "series_pow",
    "series_zero",
    "LaurentMap",
    "expand_identity_residual",
    "expand_term",
    "expand_terms",
    "jtp_expand",
    "jtp_window",
]
