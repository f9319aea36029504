"""
Identity Verifier
=================

Three-step verification of Σ_k θ_k = 0:

1. Relations: one system of contiguous relations satisfied by every term
2. Parallelepiped: the integer points Π_W of the relation vectors W
3. Coefficients: the residual Σ_k [a^β] θ_k vanishes for every β ∈ Π_W

When every term has independent factor exponents and the relations span
the common exponent space, steps 1-3 prove the identity (status Proved).
Otherwise the run downgrades to series mode: every term is expanded to
q^N and the residual is checked on all populated a-exponents, giving at
best VerifiedToOrder.

Mathematical failure never raises: it is recorded in the certificate.

Related Files:
- theta/relations/system.py: step 1
- theta/lattice/parallelepiped.py: step 2
- theta/coefficients/: step 3 (exact)
- theta/series/expansion.py: series mode
"""

from __future__ import annotations
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Union

from services.config import ModeOverride
from theta.coefficients import (
    VerdictKind,
    ZeroVerdict,
    cf_is_zero,
    cf_sum,
    extract_exact,
    series_to_form,
)
from theta.errors import ThetaError, UnnormalizableSignature
from theta.lattice import decompose, pi_points
from theta.model.types import Identity, IntVector, add_vectors, identity_denominator
from theta.parser.formatter import format_identity
from theta.prover.certificate import EXACT, Certificate, Check, Mode, RelationCheck, Status
from theta.prover.gate import soundness_gate
from theta.prover.recurrence import support_cosets
from theta.relations import (
    ContiguousRelation,
    MismatchReport,
    RelationSystem,
    apply_shift,
    common_relation_system,
)
from theta.series.expansion import LaurentMap, expand_term
from theta.series.qseries import QSeries, series_zero

logger = logging.getLogger(__name__)

MAX_SERIES_CLASSES = 10_000


# ============================================================================
# RELATION TABLE
# ============================================================================

def relation_table(identity: Identity, system: Iterable[ContiguousRelation]) -> List[RelationCheck]:
    """For every shared relation, whether each term obeys the same law."""
    table = []
    for rel in system:
        oks = []
        for term in identity.terms:
            try:
                oks.append(apply_shift(term, rel.alpha).same_law(rel))
            except ThetaError:
                oks.append(False)
        table.append(RelationCheck(rel.alpha, rel.rho, rel.w, rel.s, tuple(oks)))
    return table


def _mismatch_table(identity: Identity, mismatch: MismatchReport) -> List[RelationCheck]:
    """The offending relation of term 1, checked against every term."""
    if mismatch.expected is None:
        return []
    return relation_table(identity, [mismatch.expected])


# ============================================================================
# EXACT MODE
# ============================================================================

def _check_points(identity: Identity, W: Sequence[IntVector]) -> List[IntVector]:
    pi = pi_points(W)
    points: List[IntVector] = []
    for coset in support_cosets(identity, W):
        points.extend(add_vectors(coset, beta) for beta in pi)
    return points


def _exact_checks(identity: Identity, points: Sequence[IntVector], order: int) -> List[Check]:
    checks = []
    for beta in points:
        forms = tuple(extract_exact(term, beta) for term in identity.terms)
        try:
            residual = cf_sum(forms)
        except UnnormalizableSignature as exc:
            logger.warning("beta=%s: comparing unrefined forms: %s", beta, exc)
            residual = cf_sum(forms, canonical=False)
        verdict = cf_is_zero(residual, order)
        logger.debug("beta=%s verdict=%s", beta, verdict)
        checks.append(Check(beta, forms, residual, verdict))
        if verdict.kind is VerdictKind.NONZERO:
            break
    return checks


def _status_from_checks(checks: Sequence[Check], exact: bool):
    for check in checks:
        if check.verdict.kind is VerdictKind.NONZERO:
            return Status.FAILED, f"nonzero residual at beta = {check.beta}"
    if exact and all(check.verdict.is_zero for check in checks):
        return Status.PROVED, ""
    unknown = [c for c in checks if c.verdict.kind is VerdictKind.UNKNOWN_TO_ORDER]
    if exact and unknown:
        return Status.VERIFIED_TO_ORDER, f"residual at beta = {unknown[0].beta} only vanishes to order {unknown[0].verdict.order}"
    return Status.VERIFIED_TO_ORDER, ""


# ============================================================================
# SERIES MODE
# ============================================================================

def _series_checks(
    identity: Identity,
    system: RelationSystem,
    order: int,
) -> tuple:
    """
    Expand every term to q^order and test the residual on each populated a-exponent.

    Returns:
        (checks, failing η or None); checks hold one entry per class
        representative in β + ZW, capped at MAX_SERIES_CLASSES
    """
    D = identity_denominator(identity, *(rel.s for rel in system), *(v for rel in system for v in rel.alpha))
    expansions: List[LaurentMap] = [expand_term(term, order, D) for term in identity.terms]
    cutoff = expansions[0].cutoff

    def residual_at(eta) -> QSeries:
        total = series_zero(D, cutoff)
        for expansion in expansions:
            total = total + expansion.entry(eta)
        return total

    populated = sorted({eta for expansion in expansions for eta in expansion.entries})
    W = list(system.W)
    representatives: Dict[IntVector, IntVector] = {}
    for beta in _check_points(identity, W):
        representatives[beta] = beta
    for eta in populated:
        try:
            beta, _ = decompose(eta, W)
        except ThetaError:
            beta = eta
        representatives.setdefault(beta, eta)
        if len(representatives) >= MAX_SERIES_CLASSES:
            logger.warning("series check capped at %d classes", MAX_SERIES_CLASSES)
            break

    checks = []
    for beta, eta in representatives.items():
        residual = residual_at(eta)
        verdict = ZeroVerdict(VerdictKind.UNKNOWN_TO_ORDER, int(order)) if residual.is_zero else ZeroVerdict(VerdictKind.NONZERO)
        forms = tuple(series_to_form(expansion.entry(eta)) for expansion in expansions)
        checks.append(Check(eta, forms, series_to_form(residual), verdict))

    failing = next((eta for eta in populated if not residual_at(eta).is_zero), None)
    return checks, failing


# ============================================================================
# PUBLIC API
# ============================================================================

def verify(
    identity: Identity,
    shifts: Optional[Sequence[Sequence]] = None,
    order: int = 100,
    mode: Optional[Union[ModeOverride, str]] = None,
) -> Certificate:
    """
    Verify Σ terms = 0 and return its certificate.

    Args:
        identity: At least two terms
        shifts: Relation shifts; derived from the first term when omitted
        order: Truncation order for series mode and UnknownToOrder checks
        mode: Force exact or series mode

    Example:
        Bailey's five-variable identity with its four hand-picked shifts is
        Proved with four checks.
    """
    mode = ModeOverride(mode) if isinstance(mode, str) else mode
    text = format_identity(identity)
    cert = Certificate(identity=text, mode=EXACT)

    if len(identity.terms) < 2:
        cert.status, cert.detail = Status.UNSUPPORTED, "an identity needs at least two terms"
        return cert

    try:
        system = common_relation_system(identity, shifts)
    except ThetaError as exc:
        logger.info("no relation system: %s", exc)
        cert.status, cert.detail = Status.UNSUPPORTED, f"relations: {exc}"
        return cert
    if not isinstance(system, RelationSystem):
        cert.relations = _mismatch_table(identity, system)
        cert.status, cert.detail = Status.FAILED, f"relation mismatch at {system.describe()}"
        return cert

    cert.relations = relation_table(identity, system)
    cert.W = list(system.W)
    gate = soundness_gate(identity, system)
    exact = gate.exact_mode_permitted and mode is not ModeOverride.SERIES
    if not gate.exact_mode_permitted:
        reasons = "; ".join(gate.reasons())
        if mode is ModeOverride.EXACT:
            cert.status, cert.detail = Status.UNSUPPORTED, f"exact mode not available: {reasons}"
            return cert
        logger.warning("downgrading to series mode: %s", reasons)

    try:
        cert.pi = list(pi_points(cert.W))
        if exact:
            points = _check_points(identity, cert.W)
            cert.checks = _exact_checks(identity, points, order)
            cert.status, cert.detail = _status_from_checks(cert.checks, exact=True)
        else:
            cert.mode = Mode(int(order))
            cert.checks, failing = _series_checks(identity, system, order)
            if failing is not None:
                cert.status, cert.detail = Status.FAILED, f"residual does not vanish at a-exponent {failing}"
            else:
                cert.status, cert.detail = _status_from_checks(cert.checks, exact=False)
    except ThetaError as exc:
        logger.info("verification stopped: %s", exc)
        cert.status, cert.detail = Status.UNSUPPORTED, str(exc)

    logger.info("status %s with |W| = %d, |Pi_W| = %d", cert.status.value, len(cert.W), len(cert.pi))
    return cert
