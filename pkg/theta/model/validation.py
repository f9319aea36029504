"""
Term validation: exponent spaces and exact-mode eligibility.

Exact verification needs m linearly independent factor exponent vectors with
1 < m ≤ r. Terms that fail are still usable, but only in series mode.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence

from services.linalg import rank, rref
from theta.model.types import IntVector, ThetaTerm


@dataclass(frozen=True)
class ValidationReport:
    m: int
    r: int
    dim: int
    gammas_independent: bool
    m_in_range: bool

    @property
    def exact_mode_eligible(self) -> bool:
        return self.gammas_independent and self.m_in_range

    def reasons(self) -> List[str]:
        out = []
        if not self.gammas_independent:
            out.append(f"factor exponents are dependent (rank {self.dim} < {self.m} factors)")
        if not self.m_in_range:
            out.append(f"factor count m={self.m} outside 1 < m <= r={self.r}")
        return out


def primitive(vector: Sequence[Fraction]) -> IntVector:
    """Smallest integer vector with the same direction (first nonzero entry kept in sign)."""
    den = 1
    for v in vector:
        den = lcm(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(ints)
    return tuple(v // g for v in ints)


def exponent_space(term: ThetaTerm) -> List[IntVector]:
    """
    Basis of U = span{γ_i} as primitive integer vectors (reduced echelon rows).

    Example:
        Two equal gammas (1, 0) and (1, 0) → [(1, 0)]
    """
    if not term.factors:
        return []
    reduced, pivots = rref(term.gammas, term.r)
    return [primitive(reduced[i]) for i in range(len(pivots))]


def spans_equal(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], r: int) -> bool:
    """True iff the rational spans of the two vector lists coincide."""
    ra = rank(a, r) if a else 0
    rb = rank(b, r) if b else 0
    if ra != rb:
        return False
    stacked = list(a) + list(b)
    return (rank(stacked, r) if stacked else 0) == ra


def validate_term(term: ThetaTerm, r: int) -> ValidationReport:
    """
    Check the exact-mode hypotheses for one term.

    Example:
        The quintuple product term with gammas {1, 2} in one variable is
        reported with gammas_independent = False.
    """
    m = len(term.factors)
    dim = rank(term.gammas, r) if m else 0
    return ValidationReport(
        m=m,
        r=r,
        dim=dim,
        gammas_independent=dim == m,
        m_in_range=1 < m <= r,
    )
