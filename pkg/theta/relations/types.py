"""
Contiguous relation value types.

A relation records θ(a₁q^{α₁}, …, a_rq^{α_r}) · a^w · q^s · (−1)^ρ = θ(a), i.e.
the ratio θ(a∘q^α)/θ(a) equals (−1)^ρ a^{−w} q^{−s}.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from services.linalg import rank
from theta.errors import DegenerateShift, DependentRelations
from theta.model.types import IntVector


@dataclass(frozen=True)
class ContiguousRelation:
    alpha: Tuple[Fraction, ...]
    rho: int
    w: IntVector
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(Fraction(v) for v in self.alpha))
        object.__setattr__(self, "w", tuple(int(v) for v in self.w))
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "rho", int(self.rho) % 2)
        if not any(self.w):
            raise DegenerateShift(f"shift {self.alpha} gives the trivial relation w = 0")

    @property
    def integral_shift(self) -> bool:
        return all(v.denominator == 1 for v in self.alpha)

    def same_law(self, other: "ContiguousRelation") -> bool:
        """Equal (ρ, w, s) triples."""
        return (self.rho, self.w, self.s) == (other.rho, other.w, other.s)


@dataclass(frozen=True)
class RelationSystem:
    """Relations whose w vectors are linearly independent."""
    relations: Tuple[ContiguousRelation, ...]

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        if self.relations:
            r = len(self.relations[0].w)
            if rank([rel.w for rel in self.relations], r) < len(self.relations):
                raise DependentRelations(
                    "relation exponent vectors are dependent: "
                    + ", ".join(str(rel.w) for rel in self.relations)
                )

    @property
    def W(self) -> Tuple[IntVector, ...]:
        return tuple(rel.w for rel in self.relations)

    @property
    def shifts(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(rel.alpha for rel in self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)


@dataclass(frozen=True)
class MismatchReport:
    """First (term, relation) pair whose law differs from the first term's."""
    term_index: int
    relation_index: int
    expected: Optional[ContiguousRelation]
    found: Optional[ContiguousRelation]
    reason: str

    def describe(self) -> str:
        return f"term {self.term_index + 1}, relation {self.relation_index + 1}: {self.reason}"


def relation_from_ratio(alpha: Sequence, sign: int, aexp: Sequence[int], qexp) -> ContiguousRelation:
    """Build a relation from its ratio (−1)^ρ a^{aexp} q^{qexp}."""
    return ContiguousRelation(
        alpha=tuple(alpha),
        rho=1 if sign < 0 else 0,
        w=tuple(-v for v in aexp),
        s=-Fraction(qexp),
    )
