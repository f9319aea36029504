"""
Multivariate Expansion Oracle
=============================

Brute-force expansion of theta terms as Laurent series in the variables with
truncated q-series coefficients, by Jacobi's triple product:

    [x; q^t]∞ = Σ_n (−1)^{(1+δ)n} q^{t·C(n,2) + z·n} a^{γ·n} / (q^t; q^t)∞

This module provides:
- LaurentMap: a-exponent η -> QSeries
- jtp_window / jtp_expand: the expansion of one factor
- expand_term: one full term (prefactors included)
- expand_identity_residual: Σ terms; empty iff the identity holds to order N

The integer numerators of all factors are convolved first (pruned against the
cutoff), and the a-free part (coefficient, Pochhammer quotient, Euler
denominators) is multiplied in once per η.

Related Files:
- theta/series/qseries.py: QSeries arithmetic and euler_expand
- theta/coefficients/forms.py: exact counterpart of a single entry
"""

from __future__ import annotations
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from theta.model.types import Identity, IntVector, PochQuotient, ThetaFactor, ThetaTerm, add_vectors
from theta.series.qseries import (
    QSeries,
    euler_expand,
    scaled,
    scaled_cutoff,
    series_inv,
    series_mul,
    series_pow,
    series_zero,
)

logger = logging.getLogger(__name__)

Numerator = Dict[IntVector, Dict[int, Fraction]]


@dataclass
class LaurentMap:
    """η -> QSeries with common denominator and cutoff; zero entries dropped."""
    denom: int
    cutoff: int
    entries: Dict[IntVector, QSeries] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {eta: s for eta, s in self.entries.items() if not s.is_zero}

    @property
    def order(self) -> Fraction:
        return Fraction(self.cutoff, self.denom)

    def entry(self, eta: Sequence[int]) -> QSeries:
        return self.entries.get(tuple(eta), series_zero(self.denom, self.cutoff))

    def is_empty(self) -> bool:
        return not self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[IntVector]:
        return iter(sorted(self.entries))

    def items(self) -> Iterator[Tuple[IntVector, QSeries]]:
        for eta in sorted(self.entries):
            yield eta, self.entries[eta]


# ============================================================================
# SINGLE FACTOR
# ============================================================================

def jtp_window(factor: ThetaFactor, bound: int, D: int) -> List[Tuple[int, int, int]]:
    """
    All n whose numerator exponent t·C(n,2) + z·n (scaled by D) is ≤ bound.

    Scans outward from the vertex n* = 1/2 − z/t of the parabola.

    Returns:
        (n, sign, scaled exponent) triples in increasing n
    """
    T = scaled(factor.t, D)
    Z = scaled(factor.z, D)

    def exponent(n: int) -> int:
        return T * n * (n - 1) // 2 + Z * n

    def sign(n: int) -> int:
        return -1 if ((1 + factor.delta) * n) % 2 else 1

    vertex = Fraction(1, 2) - factor.z / factor.t
    start = math.floor(vertex)
    out: List[Tuple[int, int, int]] = []

    n = start
    while True:
        e = exponent(n)
        if e <= bound:
            out.append((n, sign(n), e))
        elif n >= vertex:
            break
        n += 1
    n = start - 1
    while True:
        e = exponent(n)
        if e > bound:
            break
        out.append((n, sign(n), e))
        n -= 1

    out.sort()
    return out


def _numerator_minimum(factor: ThetaFactor, D: int) -> int:
    """Smallest scaled exponent t·C(n,2) + z·n over all integers n."""
    vertex = Fraction(1, 2) - factor.z / factor.t
    T = scaled(factor.t, D)
    Z = scaled(factor.z, D)
    return min(T * n * (n - 1) // 2 + Z * n for n in (math.floor(vertex), math.ceil(vertex)))


def jtp_expand(factor: ThetaFactor, order, D: int) -> LaurentMap:
    """
    Expansion of one bracket, Euler denominator included.

    Example:
        [z; q] has −1/(q; q)∞ at z¹ (the n = 1 term).
    """
    cutoff = scaled_cutoff(order, D)
    denominator = series_inv(euler_expand(factor.t, factor.t, order, D))
    numer: Dict[IntVector, Dict[int, Fraction]] = defaultdict(dict)
    for n, sgn, e in jtp_window(factor, cutoff, D):
        eta = tuple(n * g for g in factor.gamma)
        numer[eta][e] = numer[eta].get(e, 0) + sgn
    entries = {
        eta: series_mul(QSeries(D, cutoff, coeffs), denominator).truncate(cutoff)
        for eta, coeffs in numer.items()
    }
    return LaurentMap(D, cutoff, entries)


# ============================================================================
# TERMS
# ============================================================================

def _term_numerator(term: ThetaTerm, cutoff: int, D: int) -> Numerator:
    """
    coeff · a^κ q^σ · Π_i (JTP numerator of factor i), exponents ≤ cutoff.
    """
    sigma = scaled(term.sigma, D)
    minima = [_numerator_minimum(f, D) for f in term.factors]
    total_min = sum(minima)
    windows = []
    for f, m in zip(term.factors, minima):
        bound = cutoff - sigma - (total_min - m)
        windows.append(jtp_window(f, bound, D))

    # suffix minima for pruning partial products
    rest = [0] * (len(minima) + 1)
    for i in range(len(minima) - 1, -1, -1):
        rest[i] = rest[i + 1] + minima[i]

    partial: Dict[Tuple[IntVector, int], int] = {(term.kappa, sigma): term.mono.sign}
    for i, (f, window) in enumerate(zip(term.factors, windows)):
        nxt: Dict[Tuple[IntVector, int], int] = defaultdict(int)
        limit = cutoff - rest[i + 1]
        for (eta, e0), c in partial.items():
            for n, sgn, e in window:
                total = e0 + e
                if total > limit:
                    continue
                key = (add_vectors(eta, tuple(n * g for g in f.gamma)), total)
                nxt[key] += c * sgn
        partial = {k: v for k, v in nxt.items() if v}

    out: Numerator = defaultdict(dict)
    for (eta, e), c in partial.items():
        out[eta][e] = out[eta].get(e, 0) + term.coeff * c
    return out


def _prefactor(poch: PochQuotient, moduli: Sequence[Fraction], cutoff: int, D: int) -> QSeries:
    """poch · Π_i (q^{t_i}; q^{t_i})∞^{−1} known to the scaled cutoff."""
    order = Fraction(max(cutoff, 0), D)
    result = QSeries(D, max(cutoff, 0), {0: Fraction(1)})
    exponents: Dict[Tuple[Fraction, Fraction], int] = dict(poch.as_dict())
    for t in moduli:
        exponents[(t, t)] = exponents.get((t, t), 0) - 1
    for (s, t), e in sorted(exponents.items()):
        if e:
            result = series_mul(result, series_pow(euler_expand(s, t, order, D), e))
    return result


def _group_key(term: ThetaTerm):
    return term.poch, tuple(sorted(f.t for f in term.factors))


def _expand_group(terms: Sequence[ThetaTerm], cutoff: int, D: int) -> Dict[IntVector, QSeries]:
    numerator: Numerator = defaultdict(dict)
    for term in terms:
        for eta, coeffs in _term_numerator(term, cutoff, D).items():
            slot = numerator[eta]
            for e, c in coeffs.items():
                slot[e] = slot.get(e, 0) + c

    populated = {eta: {e: c for e, c in coeffs.items() if c} for eta, coeffs in numerator.items()}
    populated = {eta: coeffs for eta, coeffs in populated.items() if coeffs}
    if not populated:
        return {}
    lowest = min(min(coeffs) for coeffs in populated.values())
    poch, moduli = _group_key(terms[0])
    prefactor = _prefactor(poch, moduli, cutoff - min(lowest, 0), D)

    out: Dict[IntVector, QSeries] = {}
    for eta, coeffs in populated.items():
        product = series_mul(QSeries(D, cutoff, coeffs), prefactor)
        out[eta] = product.truncate(cutoff)
    return out


def expand_terms(terms: Iterable[ThetaTerm], order, D: int) -> LaurentMap:
    """Σ of the given terms, grouping equal a-free prefactors."""
    cutoff = scaled_cutoff(order, D)
    groups: Dict[object, List[ThetaTerm]] = {}
    for term in terms:
        groups.setdefault(_group_key(term), []).append(term)

    total: Dict[IntVector, QSeries] = {}
    for members in groups.values():
        for eta, series in _expand_group(members, cutoff, D).items():
            total[eta] = total[eta] + series if eta in total else series
    return LaurentMap(D, cutoff, total)


def expand_term(term: ThetaTerm, order, D: int) -> LaurentMap:
    """
    Expansion of one term to q^order.

    Example:
        The first term of Bailey's quintuple generalization has constant
        term 1/(q; q)∞⁴ at η = 0.
    """
    return expand_terms([term], order, D)


def expand_identity_residual(identity: Identity, order, D: int) -> LaurentMap:
    """Σ_k term_k; the identity holds to q^order iff the map is empty."""
    residual = expand_terms(identity.terms, order, D)
    logger.debug("residual at order %s has %d nonzero entries", order, len(residual))
    return residual

