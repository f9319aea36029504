"""
Relations shared by every term of an identity.
"""

from __future__ import annotations
import logging
from typing import Optional, Sequence, Union

from theta.errors import NotContiguous
from theta.model.types import Identity
from theta.relations.contiguous import apply_shift, base_shifts, lift_shift, relation_basis
from theta.relations.types import MismatchReport, RelationSystem

logger = logging.getLogger(__name__)


def common_relation_system(
    identity: Identity,
    shifts: Optional[Sequence[Sequence]] = None,
) -> Union[RelationSystem, MismatchReport]:
    """
    Relations of the first term, checked against every other term.

    Without explicit shifts the base shifts of the first term are lifted so
    that they are contiguous for all terms before being applied.

    Returns:
        The shared RelationSystem, or a MismatchReport naming the first
        (term, relation) pair whose (ρ, w, s) differs

    Raises:
        ThetaError subclasses when the first term itself admits no system
        (NotContiguous for an explicit shift, DependentRelations, ...)
    """
    first = identity.terms[0]
    if shifts is None:
        shifts = [lift_shift(alpha, identity.terms) for alpha in base_shifts(first)]
    system = relation_basis(first, shifts)
    logger.info("first term satisfies %d relations, W = %s", len(system), list(system.W))

    for k, term in enumerate(identity.terms[1:], start=1):
        for j, expected in enumerate(system):
            try:
                found = apply_shift(term, expected.alpha)
            except NotContiguous as exc:
                return MismatchReport(k, j, expected, None, str(exc))
            if not found.same_law(expected):
                reason = (
                    f"expected (rho, w, s) = ({expected.rho}, {expected.w}, {expected.s}), "
                    f"found ({found.rho}, {found.w}, {found.s})"
                )
                logger.info("relation mismatch at term %d, relation %d", k + 1, j + 1)
                return MismatchReport(k, j, expected, found, reason)
    return system
