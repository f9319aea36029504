"""
Truncated Q-Series
==================

Exact truncated Laurent series in q^(1/D) with Fraction coefficients.

This module provides:
- QSeries: sparse coefficients plus a known-up-to cutoff
- Ring operations that track precision (series_add, series_mul, series_inv, ...)
- euler_expand: Π_{k≥0}(1 − q^{s+kt}) truncated, cached

Exponents are stored scaled by D, so q^(3/2) at D = 2 is the integer key 3.
A series is known exactly for every scaled exponent ≤ cutoff; nothing is
claimed beyond it.

Related Files:
- theta/series/expansion.py: Jacobi triple product expansions built on this
- theta/coefficients/forms.py: closed forms evaluated through euler_expand
"""

from __future__ import annotations
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Tuple

from theta.errors import BadDenominator, NonUnitLeadingTerm


def scaled(value, D: int) -> int:
    """value·D as an int, or BadDenominator."""
    x = Fraction(value) * D
    if x.denominator != 1:
        raise BadDenominator(f"exponent {value} is not a multiple of 1/{D}")
    return x.numerator


def scaled_cutoff(order, D: int) -> int:
    """Largest scaled exponent not exceeding the order N."""
    return math.floor(Fraction(order) * D)


@dataclass(frozen=True)
class QSeries:
    """
    Σ coeffs[k] q^(k/D), exact for all k ≤ cutoff.

    Zero coefficients are never stored.
    """
    denom: int
    cutoff: int
    coeffs: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: Fraction(c) for k, c in self.coeffs.items() if c and k <= self.cutoff}
        object.__setattr__(self, "coeffs", clean)

    @property
    def order(self) -> Fraction:
        return Fraction(self.cutoff, self.denom)

    @property
    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    @property
    def valuation(self) -> int:
        """Smallest stored scaled exponent (cutoff + 1 for a zero series)."""
        return min(self.coeffs) if self.coeffs else self.cutoff + 1

    def coefficient(self, exponent) -> Fraction:
        k = scaled(exponent, self.denom)
        if k > self.cutoff:
            raise ValueError(f"coefficient of q^{exponent} is beyond the known order {self.order}")
        return self.coeffs.get(k, Fraction(0))

    def items(self) -> Iterator[Tuple[Fraction, Fraction]]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        for k in sorted(self.coeffs):
            yield Fraction(k, self.denom), self.coeffs[k]

    def truncate(self, cutoff: int) -> "QSeries":
        if cutoff > self.cutoff:
            raise ValueError("cannot extend a series beyond its known order")
        return QSeries(self.denom, cutoff, self.coeffs)

    def shift(self, exponent) -> "QSeries":
        """Multiply by q^exponent."""
        k = scaled(exponent, self.denom)
        return QSeries(self.denom, self.cutoff + k, {e + k: c for e, c in self.coeffs.items()})

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return QSeries(self.denom, self.cutoff, {k: v * c for k, v in self.coeffs.items()})

    def __add__(self, other: "QSeries") -> "QSeries":
        return series_add(self, other)

    def __neg__(self) -> "QSeries":
        return series_neg(self)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return series_add(self, series_neg(other))

    def __mul__(self, other: "QSeries") -> "QSeries":
        return series_mul(self, other)

    def __str__(self) -> str:
        if not self.coeffs:
            return f"O(q^{self.order})" if self.cutoff >= 0 else "0"
        parts = []
        for e, c in self.items():
            parts.append(f"{c}*q^{e}" if e else str(c))
        return " + ".join(parts) + f" + O(q^{self.order + Fraction(1, self.denom)})"


# ============================================================================
# CONSTRUCTORS
# ============================================================================

def series_zero(D: int, cutoff: int) -> QSeries:
    return QSeries(D, cutoff, {})


def series_monomial(c, exponent, D: int, cutoff: int) -> QSeries:
    """c·q^exponent known to the given scaled cutoff."""
    return QSeries(D, cutoff, {scaled(exponent, D): Fraction(c)})


# ============================================================================
# RING OPERATIONS
# ============================================================================

def _same_denominator(a: QSeries, b: QSeries) -> None:
    if a.denom != b.denom:
        raise BadDenominator(f"series over q^(1/{a.denom}) and q^(1/{b.denom}) cannot be combined")


def series_add(a: QSeries, b: QSeries) -> QSeries:
    _same_denominator(a, b)
    cutoff = min(a.cutoff, b.cutoff)
    out = {k: c for k, c in a.coeffs.items() if k <= cutoff}
    for k, c in b.coeffs.items():
        if k <= cutoff:
            out[k] = out.get(k, 0) + c
    return QSeries(a.denom, cutoff, out)


def series_neg(a: QSeries) -> QSeries:
    return QSeries(a.denom, a.cutoff, {k: -c for k, c in a.coeffs.items()})


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """
    Product; known up to min(cutoff_a + val_b, cutoff_b + val_a).

    Example:
        (1 − q)·(1 + q + q² + …) → 1 to the common order
    """
    _same_denominator(a, b)
    cutoff = min(a.cutoff + b.valuation, b.cutoff + a.valuation)
    out: Dict[int, Fraction] = {}
    for ka, ca in a.coeffs.items():
        for kb, cb in b.coeffs.items():
            k = ka + kb
            if k <= cutoff:
                out[k] = out.get(k, 0) + ca * cb
    return QSeries(a.denom, cutoff, out)


def series_inv(a: QSeries) -> QSeries:
    """
    Multiplicative inverse.

    The lowest known term must be nonzero; if a = q^v·(c + …) is known to
    cutoff C, the inverse is known to C − 2v.

    Raises:
        NonUnitLeadingTerm: for a series with no known nonzero coefficient
    """
    if not a.coeffs:
        raise NonUnitLeadingTerm("cannot invert a series with no known nonzero term")
    v = min(a.coeffs)
    lead = a.coeffs[v]
    span = a.cutoff - v
    tail = [(k - v, c) for k, c in sorted(a.coeffs.items()) if k != v]
    inv = [Fraction(0)] * (span + 1)
    inv[0] = 1 / lead
    for n in range(1, span + 1):
        acc = Fraction(0)
        for j, c in tail:
            if j > n:
                break
            if inv[n - j]:
                acc += c * inv[n - j]
        inv[n] = -acc / lead
    return QSeries(a.denom, a.cutoff - 2 * v, {n - v: c for n, c in enumerate(inv) if c})


def series_pow(a: QSeries, e: int) -> QSeries:
    """a^e for an integer e (negative powers go through series_inv)."""
    if e < 0:
        return series_pow(series_inv(a), -e)
    if e == 0:
        return QSeries(a.denom, a.cutoff, {0: Fraction(1)})
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


# ============================================================================
# EULER PRODUCTS
# ============================================================================

@lru_cache(maxsize=512)
def _euler_coefficients(s: int, t: int, cutoff: int) -> Tuple[int, ...]:
    poly = [0] * (cutoff + 1)
    poly[0] = 1
    e = s
    while e <= cutoff:
        for i in range(cutoff, e - 1, -1):
            poly[i] -= poly[i - e]
        e += t
    return tuple(poly)


def euler_expand(s, t, order, D: int) -> QSeries:
    """
    (q^s; q^t)∞ = Π_{k≥0}(1 − q^{s+kt}) truncated at q^order.

    Raises:
        BadDenominator: if s or t is not a multiple of 1/D

    Example:
        >>> sorted(euler_expand(1, 1, 7, 1).coeffs.items())
        [(0, Fraction(1, 1)), (1, Fraction(-1, 1)), (2, Fraction(-1, 1)), (5, Fraction(1, 1)), (7, Fraction(1, 1))]
    """
    ss, tt = scaled(s, D), scaled(t, D)
    if ss <= 0 or tt <= 0:
        raise ValueError(f"(q^{s};q^{t}) needs s, t > 0")
    cutoff = scaled_cutoff(order, D)
    if cutoff < 0:
        return series_zero(D, cutoff)
    coeffs = _euler_coefficients(ss, tt, cutoff)
    return QSeries(D, cutoff, {k: Fraction(c) for k, c in enumerate(coeffs) if c})
