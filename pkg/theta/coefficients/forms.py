"""
Coefficient Forms
=================

Exact closed forms for single coefficients of theta terms.

A coefficient form is a finite sum of atoms

    c · q^e · Π (q^s; q^t)∞^k

with rational c, e and integer k. Forms coming from different terms are
compared after refining every Pochhammer symbol to one common modulus T:

    (q^s; q^t)∞ = Π_{j=0}^{T/t − 1} (q^{s+jt}; q^T)∞

After refinement every key (s, T) with 0 < s ≤ T names a distinct set of
factors (1 − q^n), so two atoms with equal (e, signature) are literally the
same product and their constants can be added.

This module provides:
- CoeffAtom / CoefficientForm: the value types (atoms merged on construction)
- cf_canonicalize, cf_sum, cf_scale: exact manipulation
- cf_is_zero: Zero / NonZero / UnknownToOrder(N) verdicts
- cf_to_series, series_to_form: bridges to truncated q-series

Related Files:
- theta/coefficients/extraction.py: builds one-atom forms from terms
- theta/series/qseries.py: euler_expand used by cf_to_series
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from theta.errors import UnnormalizableSignature
from theta.model.types import PochKey, PochQuotient
from theta.series.qseries import (
    QSeries,
    euler_expand,
    scaled,
    scaled_cutoff,
    series_mul,
    series_pow,
    series_zero,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoeffAtom:
    """c · q^e · sig with c ≠ 0."""
    c: Fraction
    e: Fraction
    sig: PochQuotient = PochQuotient()

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "e", Fraction(self.e))
        if self.c == 0:
            raise ValueError("coefficient atoms must have a nonzero constant")

    @property
    def key(self) -> Tuple[Fraction, PochQuotient]:
        return self.e, self.sig


def _sort_key(atom: CoeffAtom):
    return atom.e, tuple((t, s, k) for (s, t), k in atom.sig)


@dataclass(frozen=True)
class CoefficientForm:
    """
    Σ atoms. Atoms with equal (e, sig) are merged and zero sums dropped on
    construction; the empty form is exactly zero.
    """
    atoms: Tuple[CoeffAtom, ...] = ()

    def __post_init__(self):
        merged: Dict[Tuple[Fraction, PochQuotient], Fraction] = {}
        for atom in self.atoms:
            merged[atom.key] = merged.get(atom.key, Fraction(0)) + atom.c
        atoms = [CoeffAtom(c, e, sig) for (e, sig), c in merged.items() if c]
        object.__setattr__(self, "atoms", tuple(sorted(atoms, key=_sort_key)))

    @classmethod
    def zero(cls) -> "CoefficientForm":
        return cls(())

    @classmethod
    def single(cls, c, e, sig: PochQuotient = PochQuotient()) -> "CoefficientForm":
        if Fraction(c) == 0:
            return cls(())
        return cls((CoeffAtom(c, e, sig),))

    @property
    def is_empty(self) -> bool:
        return not self.atoms

    def signatures(self) -> Tuple[PochQuotient, ...]:
        seen = []
        for atom in self.atoms:
            if atom.sig not in seen:
                seen.append(atom.sig)
        return tuple(seen)

    def __iter__(self) -> Iterator[CoeffAtom]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __add__(self, other: "CoefficientForm") -> "CoefficientForm":
        return cf_sum([self, other])

    def __neg__(self) -> "CoefficientForm":
        return cf_scale(self, -1)


# ============================================================================
# VERDICTS
# ============================================================================

class VerdictKind(Enum):
    ZERO = "Zero"
    NONZERO = "NonZero"
    UNKNOWN_TO_ORDER = "UnknownToOrder"


@dataclass(frozen=True)
class ZeroVerdict:
    kind: VerdictKind
    order: Optional[int] = None

    @property
    def is_zero(self) -> bool:
        return self.kind is VerdictKind.ZERO

    def __str__(self) -> str:
        if self.kind is VerdictKind.UNKNOWN_TO_ORDER:
            return f"UnknownToOrder({self.order})"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> "ZeroVerdict":
        if text.startswith("UnknownToOrder(") and text.endswith(")"):
            return cls(VerdictKind.UNKNOWN_TO_ORDER, int(text[len("UnknownToOrder("):-1]))
        return cls(VerdictKind(text))


ZERO = ZeroVerdict(VerdictKind.ZERO)
NONZERO = ZeroVerdict(VerdictKind.NONZERO)


# ============================================================================
# CANONICAL SIGNATURES
# ============================================================================

def rational_lcm(values: Iterable[Fraction]) -> Optional[Fraction]:
    """
    Least positive rational that is an integer multiple of every value.

    Example:
        {1/2, 1, 3/2} → 3
    """
    num, den = None, None
    for v in values:
        v = Fraction(v)
        if num is None:
            num, den = v.numerator, v.denominator
        else:
            num, den = lcm(num, v.numerator), gcd(den, v.denominator)
    return None if num is None else Fraction(num, den)


def common_modulus(forms: Iterable[CoefficientForm]) -> Optional[Fraction]:
    return rational_lcm(t for form in forms for atom in form for t in atom.sig.moduli())


def refine_signature(sig: PochQuotient, T: Fraction) -> PochQuotient:
    """
    Rewrite every (q^s; q^t)∞ over the modulus T.

    Raises:
        UnnormalizableSignature: t does not divide T, or some s > T remains
    """
    refined: Dict[PochKey, int] = {}
    for (s, t), k in sig:
        steps = T / t
        if steps.denominator != 1:
            raise UnnormalizableSignature(f"modulus {t} does not divide {T}")
        for j in range(steps.numerator):
            key = (s + j * t, T)
            if key[0] > T:
                raise UnnormalizableSignature(
                    f"(q^{key[0]};q^{T}) has its first exponent beyond the modulus"
                )
            refined[key] = refined.get(key, 0) + k
    return PochQuotient.from_mapping(refined)


def cf_canonicalize(form: CoefficientForm, modulus: Optional[Fraction] = None) -> CoefficientForm:
    """
    Refine all signatures to the common modulus T and merge atoms.

    Args:
        form: Any coefficient form
        modulus: T to refine to; defaults to the lcm of the form's moduli

    Raises:
        UnnormalizableSignature: see refine_signature

    Example:
        {(1,1) ↦ −2} with T = 2 → {(1,2) ↦ −2, (2,2) ↦ −2}
    """
    T = modulus if modulus is not None else common_modulus([form])
    if T is None:
        return CoefficientForm(form.atoms)
    return CoefficientForm(
        tuple(CoeffAtom(atom.c, atom.e, refine_signature(atom.sig, T)) for atom in form)
    )


def cf_sum(forms: Sequence[CoefficientForm], canonical: bool = True) -> CoefficientForm:
    """
    Exact sum; with canonical=True all summands are refined to one modulus first.

    Example:
        h + (−h) → the empty form
    """
    forms = list(forms)
    total = CoefficientForm(tuple(atom for form in forms for atom in form))
    if not canonical:
        return total
    return cf_canonicalize(total, common_modulus(forms))


def cf_scale(form: CoefficientForm, factor=1, q_shift=0) -> CoefficientForm:
    """factor · q^q_shift · form."""
    factor = Fraction(factor)
    if factor == 0:
        return CoefficientForm.zero()
    q_shift = Fraction(q_shift)
    return CoefficientForm(tuple(CoeffAtom(a.c * factor, a.e + q_shift, a.sig) for a in form))


# ============================================================================
# SERIES BRIDGE
# ============================================================================

def form_denominator(form: CoefficientForm) -> int:
    d = 1
    for atom in form:
        d = lcm(d, atom.e.denominator)
        for (s, t), _ in atom.sig:
            d = lcm(d, s.denominator, t.denominator)
    return d


def signature_series(sig: PochQuotient, order, D: int) -> QSeries:
    """Π (q^s; q^t)∞^k to q^order (the constant series 1 for an empty signature)."""
    cutoff = scaled_cutoff(order, D)
    result = QSeries(D, cutoff, {0: Fraction(1)})
    for (s, t), k in sig:
        result = series_mul(result, series_pow(euler_expand(s, t, order, D), k))
    return result


def cf_to_series(form: CoefficientForm, order, D: Optional[int] = None) -> QSeries:
    """
    Σ c · q^e · signature, truncated at q^order.

    Example:
        The single atom 1/(q; q)∞ gives the partition generating function.
    """
    D = D if D is not None else form_denominator(form)
    cutoff = scaled_cutoff(order, D)
    total = series_zero(D, cutoff)
    for atom in form:
        shift = scaled(atom.e, D)
        if shift > cutoff:
            continue
        part = signature_series(atom.sig, Fraction(cutoff - shift, D), D)
        total = total + part.shift(atom.e).scale(atom.c).truncate(cutoff)
    return total


def series_to_form(series: QSeries) -> CoefficientForm:
    """Atoms c·q^e with empty signature, one per stored coefficient."""
    return CoefficientForm(tuple(CoeffAtom(c, e) for e, c in series.items()))


# ============================================================================
# ZERO DECISION
# ============================================================================

def cf_is_zero(form: CoefficientForm, order: int = 100, canonicalize: bool = True) -> ZeroVerdict:
    """
    Decide whether a form vanishes.

    Zero for the empty canonical form. NonZero when every atom shares one
    signature, since the constants then form a nonzero polynomial in q.
    Otherwise the form is expanded to q^order: a nonzero series is NonZero,
    a vanishing one is only UnknownToOrder(order).

    Example:
        (q; q)∞ − (q; q²)∞(q²; q²)∞ with canonicalize=False → UnknownToOrder(N)
    """
    work = form
    if canonicalize:
        try:
            work = cf_canonicalize(form)
        except UnnormalizableSignature as exc:
            logger.warning("falling back to series comparison: %s", exc)
    if work.is_empty:
        return ZERO
    if len(work.signatures()) == 1:
        return NONZERO
    if cf_to_series(work, order).is_zero:
        logger.debug("form with %d atoms vanishes to order %s", len(work), order)
        return ZeroVerdict(VerdictKind.UNKNOWN_TO_ORDER, int(order))
    return NONZERO
