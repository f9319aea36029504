"""
Theta Model Types
=================

Immutable value types for multiple theta function identities.

This module provides:
- QMonomial: (−1)^δ a^γ q^z, also used for the a^κ q^σ prefactor
- ThetaFactor: one bracket [(−1)^δ a^γ q^z ; q^t]∞
- PochQuotient: a-free product Π (q^s; q^t)∞^e
- ThetaTerm: coeff · monomial · PochQuotient · Π factors
- Identity: a list of terms asserted to sum to zero

All rationals are fractions.Fraction; all exponent vectors are tuples of ints.
Values are frozen dataclasses, so they hash and compare structurally.

Related Files:
- theta/model/pairing.py: builds ThetaFactors from flat Pochhammer lists
- theta/model/validation.py: exact-mode eligibility checks
- theta/parser/: text <-> model
"""

from __future__ import annotations
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

IntVector = Tuple[int, ...]
PochKey = Tuple[Fraction, Fraction]


def zero_vector(r: int) -> IntVector:
    return (0,) * r


def add_vectors(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return tuple(x + y for x, y in zip(a, b))


def scale_vector(c: int, a: Sequence[int]) -> IntVector:
    return tuple(c * x for x in a)


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), 0)


# ============================================================================
# MONOMIALS
# ============================================================================

@dataclass(frozen=True)
class QMonomial:
    """sign · a^aexp · q^qexp with sign ∈ {+1, −1}."""
    sign: int
    qexp: Fraction
    aexp: IntVector

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"monomial sign must be ±1, got {self.sign}")
        object.__setattr__(self, "qexp", Fraction(self.qexp))
        object.__setattr__(self, "aexp", tuple(int(v) for v in self.aexp))

    @classmethod
    def one(cls, r: int) -> "QMonomial":
        return cls(1, Fraction(0), zero_vector(r))

    @property
    def is_a_free(self) -> bool:
        return not any(self.aexp)

    def __mul__(self, other: "QMonomial") -> "QMonomial":
        return QMonomial(
            self.sign * other.sign,
            self.qexp + other.qexp,
            add_vectors(self.aexp, other.aexp),
        )

    def inverse(self) -> "QMonomial":
        return QMonomial(self.sign, -self.qexp, tuple(-v for v in self.aexp))

    def power(self, e: int) -> "QMonomial":
        return QMonomial(
            -1 if self.sign == -1 and e % 2 else 1,
            self.qexp * e,
            scale_vector(e, self.aexp),
        )


# ============================================================================
# THETA FACTOR
# ============================================================================

@dataclass(frozen=True)
class ThetaFactor:
    """
    [x; q^t]∞ = (x, q^t/x; q^t)∞ with x = (−1)^delta · a^gamma · q^z.

    Fields:
        delta: 0 or 1
        gamma: exponent vector of the variables
        z: q-exponent of x (rational)
        t: modulus, a positive rational
    """
    delta: int
    gamma: IntVector
    z: Fraction
    t: Fraction

    def __post_init__(self):
        if self.delta not in (0, 1):
            raise ValueError(f"delta must be 0 or 1, got {self.delta}")
        object.__setattr__(self, "gamma", tuple(int(v) for v in self.gamma))
        object.__setattr__(self, "z", Fraction(self.z))
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t <= 0:
            raise ValueError(f"theta modulus must be positive, got {self.t}")

    @property
    def argument(self) -> QMonomial:
        """x itself."""
        return QMonomial(-1 if self.delta else 1, self.z, self.gamma)

    @property
    def partner(self) -> QMonomial:
        """q^t/x, the second Pochhammer argument of the bracket."""
        return QMonomial(-1 if self.delta else 1, self.t - self.z, tuple(-v for v in self.gamma))


# ============================================================================
# A-FREE POCHHAMMER QUOTIENT
# ============================================================================

@dataclass(frozen=True)
class PochQuotient:
    """
    Π (q^s; q^t)∞^e over a finite set of keys (s, t).

    Entries are stored sorted by (t, s) with zero exponents removed, so two
    quotients built from the same product compare equal.
    """
    entries: Tuple[Tuple[PochKey, int], ...] = ()

    def __post_init__(self):
        merged: Dict[PochKey, int] = {}
        for (s, t), e in self.entries:
            key = (Fraction(s), Fraction(t))
            if key[0] <= 0 or key[1] <= 0:
                raise ValueError(f"Pochhammer key (q^{key[0]};q^{key[1]}) must have s, t > 0")
            merged[key] = merged.get(key, 0) + int(e)
        canonical = tuple(
            (key, e) for key, e in sorted(merged.items(), key=lambda kv: (kv[0][1], kv[0][0])) if e
        )
        object.__setattr__(self, "entries", canonical)

    @classmethod
    def from_mapping(cls, mapping: Mapping[PochKey, int]) -> "PochQuotient":
        return cls(tuple(mapping.items()))

    @classmethod
    def single(cls, s, t, e: int = 1) -> "PochQuotient":
        return cls((((Fraction(s), Fraction(t)), e),))

    def as_dict(self) -> Dict[PochKey, int]:
        return dict(self.entries)

    def __iter__(self) -> Iterator[Tuple[PochKey, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __mul__(self, other: "PochQuotient") -> "PochQuotient":
        return PochQuotient(self.entries + other.entries)

    def power(self, e: int) -> "PochQuotient":
        return PochQuotient(tuple((key, k * e) for key, k in self.entries))

    def moduli(self) -> Tuple[Fraction, ...]:
        return tuple(sorted({t for (_, t), _ in self.entries}))


# ============================================================================
# TERMS AND IDENTITIES
# ============================================================================

@dataclass(frozen=True)
class ThetaTerm:
    """
    coeff · mono · poch · Π factors.

    mono carries the prefactor a^κ q^σ (kappa and sigma below); its sign is
    folded into coeff by the parser but honoured everywhere if set.
    """
    coeff: Fraction
    mono: QMonomial
    poch: PochQuotient = field(default_factory=PochQuotient)
    factors: Tuple[ThetaFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def r(self) -> int:
        return len(self.mono.aexp)

    @property
    def kappa(self) -> IntVector:
        return self.mono.aexp

    @property
    def sigma(self) -> Fraction:
        return self.mono.qexp

    @property
    def signed_coeff(self) -> Fraction:
        return self.coeff * self.mono.sign

    @property
    def gammas(self) -> Tuple[IntVector, ...]:
        return tuple(f.gamma for f in self.factors)

    def negated(self) -> "ThetaTerm":
        return replace(self, coeff=-self.coeff)

    def scaled(self, c) -> "ThetaTerm":
        return replace(self, coeff=self.coeff * Fraction(c))


@dataclass(frozen=True)
class Identity:
    """Σ terms = 0 over the declared variables."""
    vars: Tuple[str, ...]
    terms: Tuple[ThetaTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "terms", tuple(self.terms))
        r = len(self.vars)
        for k, term in enumerate(self.terms):
            if term.r != r:
                raise ValueError(f"term {k + 1} uses {term.r} variables, identity declares {r}")
            for f in term.factors:
                if len(f.gamma) != r:
                    raise ValueError(f"term {k + 1} has a factor over {len(f.gamma)} variables")

    @property
    def r(self) -> int:
        return len(self.vars)


# ============================================================================
# HELPERS
# ============================================================================

def term_variables(term: ThetaTerm) -> Tuple[int, ...]:
    """Indices of the variables a term actually depends on."""
    touched = {j for j, v in enumerate(term.kappa) if v}
    for f in term.factors:
        touched.update(j for j, v in enumerate(f.gamma) if v)
    return tuple(sorted(touched))


def _denominators_of_term(term: ThetaTerm) -> Iterable[int]:
    yield term.sigma.denominator
    for (s, t), _ in term.poch:
        yield s.denominator
        yield t.denominator
    for f in term.factors:
        yield f.z.denominator
        yield f.t.denominator


def identity_denominator(identity: Identity, *extra: Fraction) -> int:
    """
    D such that every q-exponent of the identity lies in (1/D)·Z.

    Extra rationals (e.g. relation s-values) can be folded in.
    """
    d = 1
    for term in identity.terms:
        for den in _denominators_of_term(term):
            d = lcm(d, den)
    for value in extra:
        d = lcm(d, Fraction(value).denominator)
    return d


def term_denominator(term: ThetaTerm) -> int:
    d = 1
    for den in _denominators_of_term(term):
        d = lcm(d, den)
    return d
