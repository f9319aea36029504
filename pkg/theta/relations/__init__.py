"""Contiguous relations: derivation, application, shared systems."""

from .types import ContiguousRelation, MismatchReport, RelationSystem, relation_from_ratio
from .contiguous import (
    apply_shift,
    base_shifts,
    check_relation_by_series,
    derive_relation,
    lift_shift,
    relation_basis,
)
from .system import common_relation_system

__all__ = [
    "ContiguousRelation",
    "MismatchReport",
    "RelationSystem",
    "relation_from_ratio",
    "apply_shift",
    "base_shifts",
    "check_relation_by_series",
    "derive_relation",
    "lift_shift",
    "relation_basis",
    "common_relation_system",
]
