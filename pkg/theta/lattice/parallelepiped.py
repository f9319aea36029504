"""
Fundamental Parallelepiped
==========================

Integer points of the half-open parallelepiped spanned by W and the unique
decomposition of lattice vectors against it.

For independent integer vectors w_1, …, w_d every integer point γ of
span(W) splits uniquely as γ = β + Σ b_i w_i with b ∈ Z^d and β in

    Π_W = {Σ λ_i w_i : 0 ≤ λ_i < 1} ∩ Z^r

|Π_W| is the index of ZW in the saturation lattice span(W) ∩ Z^r.

This module provides:
- saturation_basis: a basis of span(W) ∩ Z^r (HNF rows)
- pi_points: Π_W from Smith normal form coset representatives
- pi_points_box_oracle: the same set by brute-force scanning (tests only)
- decompose / in_parallelepiped: coordinates against W

Related Files:
- services/linalg/normal_forms.py: hnf, snf
- theta/prover/verifier.py: checks one coefficient per point of Π_W
"""

from __future__ import annotations
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from services.linalg import ExactSolver, hnf, inverse, rank, snf
from theta.errors import DependentW, NotInSpan
from theta.model.types import IntVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PiSet:
    """Π_W with its generators; points sorted lexicographically."""
    W: Tuple[IntVector, ...]
    points: Tuple[IntVector, ...]
    saturation_index: int

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in self.points


# ============================================================================
# HELPERS
# ============================================================================

def _as_matrix(W: Sequence[Sequence[int]]) -> List[List[int]]:
    rows = [[int(v) for v in w] for w in W]
    if not rows:
        raise DependentW("W must contain at least one vector")
    if len({len(w) for w in rows}) != 1:
        raise ValueError("vectors of W have different lengths")
    if rank(rows) < len(rows):
        raise DependentW(f"W is linearly dependent: {[tuple(w) for w in rows]}")
    return rows


class _Coordinates:
    """λ with Σ λ_i w_i = γ, via one reusable exact solver."""

    def __init__(self, W: List[List[int]]):
        self.W = W
        r = len(W[0])
        self.solver = ExactSolver([[w[j] for w in W] for j in range(r)], len(W))

    def __call__(self, point: Sequence[int]) -> Optional[Tuple[Fraction, ...]]:
        return self.solver.solve(point)

    def reduce(self, point: Sequence[int]) -> Tuple[IntVector, Tuple[int, ...]]:
        lam = self(point)
        if lam is None:
            raise NotInSpan(f"{tuple(point)} is not in the span of W")
        b = tuple(math.floor(x) for x in lam)
        beta = tuple(
            int(p) - sum(bi * w[j] for bi, w in zip(b, self.W)) for j, p in enumerate(point)
        )
        return beta, b


def _snf_data(rows: List[List[int]]):
    """(diagonal entries, first d rows of V⁻¹) for W = U⁻¹·S·V⁻¹."""
    d = len(rows)
    S, _, V = snf(rows)
    diagonal = [S[i][i] for i in range(d)]
    v_inv = [[int(x) for x in row] for row in inverse(V)]
    return diagonal, v_inv[:d]


# ============================================================================
# PUBLIC API
# ============================================================================

def saturation_basis(W: Sequence[Sequence[int]]) -> List[IntVector]:
    """
    Basis of span(W) ∩ Z^r in row Hermite normal form.

    Example:
        W = {(2, 2)} → [(1, 1)]
    """
    rows = _as_matrix(W)
    _, basis = _snf_data(rows)
    H, _ = hnf(basis)
    return [tuple(row) for row in H if any(row)]


def pi_points(W: Sequence[Sequence[int]]) -> PiSet:
    """
    Integer points of the half-open parallelepiped of W.

    The Smith form S = U·W·V writes W in the saturation basis B (first d
    rows of V⁻¹) with invariant factors d_i, so c·B for c ∈ Π [0, d_i)
    runs over the cosets of ZW; each is then reduced into the parallelepiped.

    Raises:
        DependentW: W is not linearly independent

    Example:
        W = {(1, 1), (0, 2)} → {(0, 0), (0, 1)}
    """
    rows = _as_matrix(W)
    diagonal, basis = _snf_data(rows)
    coords = _Coordinates(rows)
    r = len(rows[0])

    points = set()
    for c in itertools.product(*(range(abs(di)) for di in diagonal)):
        p = tuple(sum(ci * b[j] for ci, b in zip(c, basis)) for j in range(r))
        beta, _ = coords.reduce(p)
        points.add(beta)

    index = math.prod(abs(di) for di in diagonal)
    if len(points) != index:
        raise RuntimeError(f"expected {index} parallelepiped points, found {len(points)}")
    logger.debug("|Pi_W| = %d for W = %s", index, [tuple(w) for w in rows])
    return PiSet(tuple(tuple(w) for w in rows), tuple(sorted(points)), index)


def pi_points_box_oracle(W: Sequence[Sequence[int]]) -> PiSet:
    """
    Π_W by scanning the bounding box of the parallelepiped's vertices.

    Cost grows with the box volume, so this is a cross-check only.
    """
    rows = _as_matrix(W)
    r = len(rows[0])
    coords = _Coordinates(rows)
    lows = [0] * r
    highs = [0] * r
    for subset in itertools.product((0, 1), repeat=len(rows)):
        vertex = [sum(s * w[j] for s, w in zip(subset, rows)) for j in range(r)]
        lows = [min(lo, v) for lo, v in zip(lows, vertex)]
        highs = [max(hi, v) for hi, v in zip(highs, vertex)]

    points = []
    for p in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        lam = coords(p)
        if lam is not None and all(0 <= x < 1 for x in lam):
            points.append(tuple(p))
    return PiSet(tuple(tuple(w) for w in rows), tuple(sorted(points)), len(points))


def decompose(gamma: Sequence[int], W: Sequence[Sequence[int]]) -> Tuple[IntVector, Tuple[int, ...]]:
    """
    Split γ = β + Σ b_i w_i with β ∈ Π_W and b integral.

    Raises:
        NotInSpan: γ is outside the rational span of W

    Example:
        γ = (2, 2), W = {(1, 1), (0, 2)} → ((0, 0), (2, 0))
    """
    return _Coordinates(_as_matrix(W)).reduce(gamma)


def in_parallelepiped(point: Sequence[int], W: Sequence[Sequence[int]]) -> bool:
    """True iff point = Σ λ_i w_i with every 0 ≤ λ_i < 1."""
    lam = _Coordinates(_as_matrix(W))(point)
    return lam is not None and all(0 <= x < 1 for x in lam)
