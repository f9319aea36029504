"""
Contiguous Relations
====================

Deriving and applying contiguous relations of multiple theta functions.

Shifting a → a∘q^α moves factor i by μ_i = α·γ_i in the exponent of q. When
every μ_i is an integer multiple υ_i of the modulus t_i, the bracket law
[x q^t; q^t]∞ = −x^{−1}[x; q^t]∞ applied υ_i times gives

    θ(a∘q^α)/θ(a) = (−1)^ρ a^{−w} q^{−s}
    w = Σ υ_i γ_i
    s = Σ (z_i υ_i + t_i C(υ_i, 2)) − α·κ
    ρ = Σ (1 + δ_i) υ_i  (mod 2)

where a^κ is the monomial prefactor of the term.

This module provides:
- apply_shift: the relation produced by one shift vector
- derive_relation: the shift realizing a given combination k of factor exponents
- lift_shift: least integer multiple of a shift contiguous for several terms
- relation_basis: a full system of independent relations for one term
- check_relation_by_series: independent series check of a relation

Related Files:
- theta/relations/types.py: ContiguousRelation, RelationSystem
- theta/relations/system.py: relations shared by all terms of an identity
"""

from __future__ import annotations
import logging
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Sequence

from services.linalg import independent_rows, kernel_basis
from theta.errors import DegenerateShift, DependentGammas, DimensionMismatch, NoNonzeroEpsilon, NotContiguous
from theta.model.types import ThetaTerm, dot, term_denominator
from theta.model.validation import validate_term
from theta.relations.types import ContiguousRelation, RelationSystem
from theta.series.expansion import expand_term
from theta.series.qseries import scaled_cutoff

logger = logging.getLogger(__name__)

RatVector = Sequence[Fraction]


def _steps(term: ThetaTerm, alpha: RatVector) -> List[Fraction]:
    """υ_i = α·γ_i / t_i for every factor (possibly non-integral)."""
    return [dot(alpha, f.gamma) / f.t for f in term.factors]


# ============================================================================
# SINGLE SHIFTS
# ============================================================================

def apply_shift(term: ThetaTerm, alpha: RatVector) -> ContiguousRelation:
    """
    The contiguous relation obtained by shifting with α.

    Raises:
        DegenerateShift: α = 0, or the shift gives w = 0
        NotContiguous: some α·γ_i is not an integer multiple of t_i

    Example:
        The two-variable example's left term with α = (1, 1) gives
        ρ = 1, w = (1, 1), s = 0, i.e. the ratio −1/(ab).
    """
    alpha = tuple(Fraction(v) for v in alpha)
    if len(alpha) != term.r:
        raise DimensionMismatch(f"shift has {len(alpha)} entries for {term.r} variables")
    if not any(alpha):
        raise DegenerateShift("the zero shift gives no relation")

    w = [0] * term.r
    s = Fraction(0)
    rho = 0
    for i, (f, step) in enumerate(zip(term.factors, _steps(term, alpha))):
        if step.denominator != 1:
            raise NotContiguous(i, f"shift moves it by {step} times its modulus")
        v = step.numerator
        for j, g in enumerate(f.gamma):
            w[j] += v * g
        s += f.z * v + f.t * Fraction(v * (v - 1), 2)
        rho += (1 + f.delta) * v
    s -= dot(alpha, term.kappa)

    if not any(w):
        raise DegenerateShift(f"shift {alpha} leaves every variable exponent unchanged")
    return ContiguousRelation(alpha=alpha, rho=rho % 2, w=tuple(w), s=s)


def lift_shift(alpha: RatVector, terms: Iterable[ThetaTerm]) -> tuple:
    """
    Least positive integer multiple of α that is contiguous for every term.

    Example:
        α = (1, 0) on a term with factor [ab; q²] lifts to (2, 0).
    """
    alpha = tuple(Fraction(v) for v in alpha)
    c = 1
    for term in terms:
        for step in _steps(term, alpha):
            c = lcm(c, step.denominator)
    return tuple(c * v for v in alpha)


def derive_relation(term: ThetaTerm, k: RatVector) -> ContiguousRelation:
    """
    Relation whose exponent vector is a positive multiple of Σ k_i γ_i.

    Solves x·γ_i/t_i − ε·k_i = 0 for (x, ε), takes the first null space
    vector with ε ≠ 0, normalizes ε = 1 and scales by the least positive
    integer that makes every step x·γ_i/t_i integral.

    Raises:
        DependentGammas: factor exponent vectors are dependent
        NoNonzeroEpsilon: no solution has ε ≠ 0
    """
    k = tuple(Fraction(v) for v in k)
    if len(k) != len(term.factors):
        raise DimensionMismatch(f"k has {len(k)} entries for {len(term.factors)} factors")
    if not any(k):
        raise DegenerateShift("k = 0 gives no relation")
    if not validate_term(term, term.r).gammas_independent:
        raise DependentGammas("relations can only be derived from independent factor exponents")

    r = term.r
    rows = [[Fraction(g) / f.t for g in f.gamma] + [-ki] for f, ki in zip(term.factors, k)]
    for vector in kernel_basis(rows, r + 1):
        eps = vector[r]
        if eps != 0:
            x = [v / eps for v in vector[:r]]
            break
    else:
        raise NoNonzeroEpsilon(f"no relation realizes k = {k}")

    scale = 1
    for step in _steps(term, x):
        scale = lcm(scale, step.denominator)
    alpha = tuple(scale * v for v in x)
    logger.debug("derived shift %s for k = %s", alpha, k)
    return apply_shift(term, alpha)


# ============================================================================
# SYSTEMS
# ============================================================================

def _independent_part(term: ThetaTerm) -> ThetaTerm:
    """The term restricted to a leftmost maximal independent set of factors."""
    keep = independent_rows(term.gammas, term.r)
    if len(keep) == len(term.factors):
        return term
    return ThetaTerm(term.coeff, term.mono, term.poch, tuple(term.factors[i] for i in keep))


def base_shifts(term: ThetaTerm) -> List[tuple]:
    """Shifts derived with k = e_j over a leftmost independent factor subset."""
    core = _independent_part(term)
    d = len(core.factors)
    shifts = []
    for j in range(d):
        k = [Fraction(0)] * d
        k[j] = Fraction(1)
        shifts.append(derive_relation(core, k).alpha)
    return shifts


def relation_basis(term: ThetaTerm, shifts: Optional[Sequence[RatVector]] = None) -> RelationSystem:
    """
    d independent relations of one term.

    With explicit shifts each is applied as given; otherwise they are
    derived with k = e_1, …, e_d and lifted to be contiguous for all factors.

    Raises:
        DependentRelations: the resulting w vectors are dependent
        NotContiguous: an explicit shift does not fit the term
    """
    if shifts is None:
        shifts = [lift_shift(alpha, [term]) for alpha in base_shifts(term)]
    system = RelationSystem(tuple(apply_shift(term, alpha) for alpha in shifts))
    for rel in system:
        if not rel.integral_shift:
            logger.warning("relation uses the non-integer shift %s", tuple(str(v) for v in rel.alpha))
    return system


def check_relation_by_series(term: ThetaTerm, relation: ContiguousRelation, order=30) -> bool:
    """
    Verify θ(a∘q^α)·a^w·q^s·(−1)^ρ = θ(a) on truncated expansions.

    Each pair of entries is compared up to the precision both sides are
    known to.
    """
    D = term_denominator(term)
    D = lcm(D, relation.s.denominator, *(v.denominator for v in relation.alpha))
    expansion = expand_term(term, order, D)
    cutoff = scaled_cutoff(order, D)
    sign = -1 if relation.rho else 1

    etas = set(expansion.entries)
    etas |= {tuple(e - w for e, w in zip(eta, relation.w)) for eta in expansion.entries}
    for eta in etas:
        target = tuple(e + w for e, w in zip(eta, relation.w))
        moved = expansion.entry(eta).shift(relation.s + dot(relation.alpha, eta)).scale(sign)
        common = min(moved.cutoff, cutoff)
        if moved.truncate(common).coeffs != expansion.entry(target).truncate(common).coeffs:
            logger.debug("relation %s fails at a-exponent %s", relation.alpha, target)
            return False
    return True
