"""
Exact-mode soundness gate.

Exact verification bounds the coefficient checks by |Π_W| only when every
term has 1 < m ≤ r independent factor exponents, all terms share one
exponent space U, and the relations span U.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import List, Optional, Tuple

from services.linalg import rank
from theta.model.types import Identity
from theta.model.validation import ValidationReport, exponent_space, spans_equal, validate_term
from theta.relations.types import RelationSystem


@dataclass(frozen=True)
class GateReport:
    term_reports: Tuple[ValidationReport, ...]
    span_mismatches: Tuple[int, ...] = ()
    relation_rank: Optional[int] = None
    space_dim: int = 0

    @property
    def terms_eligible(self) -> bool:
        return all(rep.exact_mode_eligible for rep in self.term_reports)

    @property
    def relations_span(self) -> bool:
        return self.relation_rank is None or self.relation_rank == self.space_dim

    @property
    def exact_mode_permitted(self) -> bool:
        return self.terms_eligible and not self.span_mismatches and self.relations_span

    def reasons(self) -> List[str]:
        out = []
        for k, rep in enumerate(self.term_reports):
            out.extend(f"term {k + 1}: {why}" for why in rep.reasons())
        for k in self.span_mismatches:
            out.append(f"term {k + 1}: exponent space differs from term 1")
        if not self.relations_span:
            out.append(f"relations span dimension {self.relation_rank}, exponent space has {self.space_dim}")
        return out


def soundness_gate(identity: Identity, relations: Optional[RelationSystem] = None) -> GateReport:
    """
    Per-term eligibility, equality of all exponent spaces, and |W| = dim U.

    Example:
        [a; q] against [b; q] fails with term 2 named as a span mismatch.
    """
    r = identity.r
    reports = tuple(validate_term(term, r) for term in identity.terms)
    spaces = [exponent_space(term) for term in identity.terms]
    first = spaces[0] if spaces else []
    mismatched = tuple(k for k, space in enumerate(spaces[1:], start=1) if not spans_equal(first, space, r))
    dim = len(first)
    relation_rank = None
    if relations is not None:
        relation_rank = rank(relations.W, r) if len(relations) else 0
    return GateReport(reports, mismatched, relation_rank, dim)
