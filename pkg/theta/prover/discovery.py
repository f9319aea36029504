"""
Identity Discovery
==================

Find linear dependencies among candidate theta products that share a
system of contiguous relations.

Process:
1. Keep the candidates that obey every given relation
2. Compute Π_W for the relation vectors
3. For each β ∈ Π_W and each power q^e up to N, one row of coefficients
   [q^e][a^β] candidate_j
4. The rational null space of that matrix holds the candidate dependencies;
   it is recomputed at 2N to discard low-order coincidences
5. Each dependency becomes an identity and is re-verified

Coefficients are rational constants only; monomial or eta-quotient
prefactors belong inside the candidates.

Related Files:
- theta/prover/verifier.py: re-verification of each dependency
- theta/coefficients/forms.py: cf_to_series for the matrix entries
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from services.linalg import kernel_basis
from theta.coefficients import cf_to_series, extract_exact
from theta.errors import NoCandidatesSurvive, ThetaError
from theta.lattice import PiSet, pi_points
from theta.model.types import Identity, IntVector, ThetaTerm, add_vectors, term_denominator
from theta.model.validation import primitive, validate_term
from theta.prover.certificate import Certificate, Status
from theta.prover.recurrence import support_cosets
from theta.prover.verifier import verify
from theta.relations import RelationSystem, apply_shift
from theta.series.expansion import expand_term
from theta.series.qseries import QSeries, scaled_cutoff

logger = logging.getLogger(__name__)

DEFAULT_DISCOVERY_ORDER = 60


@dataclass(frozen=True)
class Dependency:
    """Σ vector_j · candidate_j = 0, with its verification certificate."""
    vector: Tuple[int, ...]
    certificate: Certificate


@dataclass
class DiscoveryResult:
    candidates: List[ThetaTerm]
    pi: PiSet
    dependencies: List[Dependency] = field(default_factory=list)
    rejections: List[Tuple[int, str]] = field(default_factory=list)
    unverified: List[Tuple[int, ...]] = field(default_factory=list)


def default_variables(r: int) -> Tuple[str, ...]:
    return tuple(f"a{j + 1}" for j in range(r))


# ============================================================================
# FILTERING
# ============================================================================

def _rejection(term: ThetaTerm, relations: RelationSystem) -> Optional[str]:
    for j, rel in enumerate(relations):
        try:
            found = apply_shift(term, rel.alpha)
        except ThetaError as exc:
            return f"relation {j + 1}: {exc}"
        if not found.same_law(rel):
            return (
                f"relation {j + 1}: expected (rho, w, s) = ({rel.rho}, {rel.w}, {rel.s}), "
                f"found ({found.rho}, {found.w}, {found.s})"
            )
    return None


def filter_candidates(candidates: Sequence[ThetaTerm], relations: RelationSystem):
    """(survivors with original indices, rejections as (index, reason))."""
    survivors: List[Tuple[int, ThetaTerm]] = []
    rejections: List[Tuple[int, str]] = []
    for i, term in enumerate(candidates):
        why = _rejection(term, relations)
        if why is None:
            survivors.append((i, term))
        else:
            logger.info("candidate %d rejected: %s", i + 1, why)
            rejections.append((i, why))
    return survivors, rejections


# ============================================================================
# COEFFICIENT MATRIX
# ============================================================================

def _coefficient_series(term: ThetaTerm, beta: IntVector, order, D: int) -> QSeries:
    if validate_term(term, term.r).gammas_independent:
        return cf_to_series(extract_exact(term, beta), order, D)
    return expand_term(term, order, D).entry(beta)


def coefficient_matrix(
    terms: Sequence[ThetaTerm],
    points: Sequence[IntVector],
    order,
) -> List[List[Fraction]]:
    """Rows indexed by (β, q-exponent), one column per term."""
    D = 1
    for term in terms:
        D = lcm(D, term_denominator(term))
    cutoff = scaled_cutoff(order, D)
    columns: List[Dict[Tuple[IntVector, int], Fraction]] = []
    for term in terms:
        column = {}
        for beta in points:
            series = _coefficient_series(term, beta, order, D)
            for k, c in series.coeffs.items():
                if k <= cutoff:
                    column[(beta, k)] = c
        columns.append(column)
    keys = sorted({key for column in columns for key in column})
    logger.debug("discovery matrix has %d rows and %d columns", len(keys), len(terms))
    return [[column.get(key, Fraction(0)) for column in columns] for key in keys]


def _normalized(vector: Sequence[Fraction]) -> Tuple[int, ...]:
    ints = primitive(vector)
    lead = next((v for v in ints if v), 1)
    return tuple(-v for v in ints) if lead < 0 else ints


def null_space(terms: Sequence[ThetaTerm], points: Sequence[IntVector], order) -> List[Tuple[int, ...]]:
    rows = coefficient_matrix(terms, points, order)
    if not rows:
        return [_normalized([Fraction(int(i == j)) for i in range(len(terms))]) for j in range(len(terms))]
    return [_normalized(v) for v in kernel_basis(rows, len(terms))]


# ============================================================================
# PUBLIC API
# ============================================================================

def discover(
    relations: RelationSystem,
    candidates: Sequence[ThetaTerm],
    order: int = DEFAULT_DISCOVERY_ORDER,
    variables: Optional[Sequence[str]] = None,
) -> DiscoveryResult:
    """
    Dependencies among the candidates that satisfy every relation.

    Raises:
        ValueError: no candidates given
        NoCandidatesSurvive: every candidate violates some relation

    Example:
        Two copies of one product give the single dependency (1, −1).
    """
    if not candidates:
        raise ValueError("discovery needs at least one candidate")
    survivors, rejections = filter_candidates(candidates, relations)
    if not survivors:
        raise NoCandidatesSurvive(rejections)

    terms = [term for _, term in survivors]
    r = terms[0].r
    variables = tuple(variables) if variables else default_variables(r)
    W = list(relations.W)
    pi = pi_points(W)
    pool = Identity(variables, tuple(terms))
    points = [add_vectors(c, beta) for c in support_cosets(pool, W) for beta in pi]

    vectors = null_space(terms, points, order)
    if vectors:
        logger.info("null space of dimension %d at order %d, re-checking at %d", len(vectors), order, 2 * order)
        vectors = null_space(terms, points, 2 * order)

    result = DiscoveryResult(terms, pi, rejections=rejections)
    for vector in vectors:
        scaled_terms = tuple(term.scaled(c) for term, c in zip(terms, vector) if c)
        if len(scaled_terms) < 2:
            logger.warning("dependency %s involves a single candidate", vector)
            result.unverified.append(vector)
            continue
        cert = verify(Identity(variables, scaled_terms), shifts=relations.shifts, order=order)
        if cert.status in (Status.PROVED, Status.VERIFIED_TO_ORDER):
            result.dependencies.append(Dependency(vector, cert))
        else:
            logger.warning("dependency %s failed re-verification: %s", vector, cert.summary())
            result.unverified.append(vector)
    return result
