"""Exact linear algebra over Q and Z."""

from .exact_matrix import (
    ColumnRankDeficient,
    ExactSolver,
    determinant,
    independent_rows,
    inverse,
    kernel_basis,
    matmul,
    rank,
    rref,
    solve_exact,
    to_fraction,
)
from .normal_forms import hnf, identity_matrix, is_unimodular, snf

__all__ = [
    # Rational
    "ColumnRankDeficient",
    "ExactSolver",
    "determinant",
    "independent_rows",
    "inverse",
    "kernel_basis",
    "matmul",
    "rank",
    "rref",
    "solve_exact",
    "to_fraction",
    # Integer
    "hnf",
    "identity_matrix",
    "is_unimodular",
    "snf",
]
