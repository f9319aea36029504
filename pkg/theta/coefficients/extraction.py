"""
Exact coefficient extraction.

For a term coeff · a^κ q^σ · poch · Π_i [x_i; q^{t_i}]∞ with independent
factor exponents γ_i, Jacobi's triple product gives a^η exactly one
contribution: the n with Σ n_i γ_i = η − κ. Its value is

    coeff · (−1)^{Σ(1+δ_i)n_i} · q^{σ + Σ(t_i C(n_i,2) + z_i n_i)}
          · poch · Π_i (q^{t_i}; q^{t_i})∞^{−1}
"""

from __future__ import annotations
import logging
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from services.linalg import ExactSolver
from theta.coefficients.forms import CoefficientForm
from theta.errors import DependentGammas
from theta.model.types import PochQuotient, ThetaTerm
from theta.model.validation import validate_term

logger = logging.getLogger(__name__)


def term_signature(term: ThetaTerm) -> PochQuotient:
    """The a-free factor shared by every coefficient of the term."""
    sig = term.poch
    for f in term.factors:
        sig = sig * PochQuotient.single(f.t, f.t, -1)
    return sig


def _solver(term: ThetaTerm) -> ExactSolver:
    rows = [[f.gamma[j] for f in term.factors] for j in range(term.r)]
    return ExactSolver(rows, len(term.factors))


def solve_indices(term: ThetaTerm, beta: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """The integer n with Σ n_i γ_i = β − κ, or None."""
    target = [b - k for b, k in zip(beta, term.kappa)]
    n = _solver(term).solve(target)
    if n is None or any(v.denominator != 1 for v in n):
        return None
    return tuple(v.numerator for v in n)


def extract_exact(term: ThetaTerm, beta: Sequence[int]) -> CoefficientForm:
    """
    [a^β] term as a closed form.

    Raises:
        DependentGammas: the term's factor exponents are dependent

    Example:
        Bailey's first term at β = (1, −1, 0, 0, 0) → −q / (q; q)∞⁴
    """
    beta = tuple(int(v) for v in beta)
    if len(beta) != term.r:
        raise ValueError(f"β has {len(beta)} entries for {term.r} variables")
    if not validate_term(term, term.r).gammas_independent:
        raise DependentGammas("exact extraction needs independent factor exponents")

    n = solve_indices(term, beta)
    if n is None:
        return CoefficientForm.zero()

    parity = sum((1 + f.delta) * ni for f, ni in zip(term.factors, n)) % 2
    exponent = term.sigma + sum(
        (f.t * Fraction(ni * (ni - 1), 2) + f.z * ni for f, ni in zip(term.factors, n)),
        Fraction(0),
    )
    c = term.signed_coeff * (-1 if parity else 1)
    logger.debug("coefficient at %s uses n = %s", beta, n)
    return CoefficientForm.single(c, exponent, term_signature(term))
