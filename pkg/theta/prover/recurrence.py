"""
Coefficient Recurrences
=======================

Iterating a relation θ(a∘q^α) = (−1)^ρ a^{−w} q^{−s} θ(a) on coefficients
gives h_{η+w} = (−1)^ρ q^{s + α·η} h_η, and b steps (b of either sign) give

    h_{η+bw} = (−1)^{bρ} q^{b·s + b·α·η + C(b,2)·α·w} h_η

so every coefficient in β + ZW is fixed by the one at β ∈ Π_W.

This module provides:
- propagate_coefficient: h at β + Σ b_i w_i from h at β
- support_cosets: translates of the saturation lattice reached by the terms

Related Files:
- theta/lattice/parallelepiped.py: decompose gives (β, b)
- theta/prover/verifier.py: check set = cosets + Π_W
"""

from __future__ import annotations
import logging
from fractions import Fraction
from typing import List, Sequence

from services.linalg import solve_exact
from theta.coefficients.forms import CoefficientForm, cf_scale
from theta.model.types import Identity, IntVector, add_vectors, dot, scale_vector
from theta.relations.types import RelationSystem

logger = logging.getLogger(__name__)


def propagate_coefficient(
    form: CoefficientForm,
    beta: Sequence[int],
    b: Sequence[int],
    relations: RelationSystem,
) -> CoefficientForm:
    """
    The coefficient at β + Σ b_i w_i given the one at β.

    Example:
        One step of the relation α = (1, 1), ρ = 1, w = (1, 1), s = 0 from
        β = (0, 0) multiplies by −1.
    """
    if len(b) != len(relations):
        raise ValueError(f"{len(b)} step counts for {len(relations)} relations")
    current: IntVector = tuple(int(v) for v in beta)
    sign = 1
    q_shift = Fraction(0)
    for steps, rel in zip(b, relations):
        steps = int(steps)
        if not steps:
            continue
        if rel.rho and steps % 2:
            sign = -sign
        q_shift += (
            steps * rel.s
            + steps * dot(rel.alpha, current)
            + Fraction(steps * (steps - 1), 2) * dot(rel.alpha, rel.w)
        )
        current = add_vectors(current, scale_vector(steps, rel.w))
    return cf_scale(form, sign, q_shift)


def support_cosets(identity: Identity, W: Sequence[Sequence[int]]) -> List[IntVector]:
    """
    Representatives c with every term's support inside ∪ (c + span(W) ∩ Z^r).

    The zero coset comes first; a prefactor exponent κ outside span(W) adds
    its own translate unless an earlier representative differs from it by
    a vector of span(W).
    """
    r = identity.r
    reps: List[IntVector] = [(0,) * r]
    columns = [[w[j] for w in W] for j in range(r)]
    for term in identity.terms:
        kappa = term.kappa
        if any(
            solve_exact(columns, [k - c for k, c in zip(kappa, rep)]) is not None
            for rep in reps
        ):
            continue
        logger.info("prefactor exponent %s opens a new coset of span(W)", kappa)
        reps.append(kappa)
    return reps
