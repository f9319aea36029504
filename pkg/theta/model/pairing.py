"""
Pochhammer Pairing
==================

Rebuilds theta brackets from flat lists of Pochhammer symbols.

A bracket [x; q^t]∞ is the pair (x, q^t/x; q^t)∞. Given all the symbols of
one modulus, pair_pochhammers scans left to right and matches each symbol
that depends on the variables with the first unmatched symbol equal to its
partner q^t/x. Symbols free of the variables are never paired; they become
entries of the a-free PochQuotient.

Related Files:
- theta/model/types.py: ThetaFactor, PochQuotient
- theta/parser/parser.py: groups symbols by modulus and calls this module
"""

from __future__ import annotations
import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from theta.errors import UnpairedVariableFactor
from theta.model.types import PochKey, PochQuotient, QMonomial, ThetaFactor

logger = logging.getLogger(__name__)


def describe_symbol(mono: QMonomial) -> str:
    """Short human-readable rendering for diagnostics."""
    parts = []
    for j, e in enumerate(mono.aexp):
        if e:
            parts.append(f"a{j + 1}" if e == 1 else f"a{j + 1}^{e}")
    if mono.qexp:
        parts.append(f"q^{mono.qexp}")
    body = "*".join(parts) or "1"
    return f"-{body}" if mono.sign < 0 else body


def a_free_entries(mono: QMonomial, modulus: Fraction) -> Dict[PochKey, int]:
    """
    Exponent map of an a-free symbol (±q^s; q^t)∞.

    (−q^s; q^t)∞ = (q^{2s}; q^{2t})∞ / (q^s; q^t)∞, so negative symbols
    become a quotient of positive ones.
    """
    s = mono.qexp
    if s <= 0:
        raise ValueError(f"a-free Pochhammer symbol needs a positive q-power, got q^{s}")
    if mono.sign > 0:
        return {(s, modulus): 1}
    return {(2 * s, 2 * modulus): 1, (s, modulus): -1}


def pair_pochhammers(
    symbols: Sequence[QMonomial],
    modulus: Fraction,
) -> Tuple[List[ThetaFactor], PochQuotient]:
    """
    Pair (x, q^t/x; q^t) symbols into theta factors.

    Args:
        symbols: First arguments of (·; q^modulus)∞ factors, in source order
        modulus: t > 0

    Returns:
        (factors in order of their first symbol, leftover a-free quotient)

    Raises:
        UnpairedVariableFactor: a symbol depending on the variables has no partner

    Example:
        (b/a, aq/b; q) → [ThetaFactor(delta=0, gamma=(-1, 1), z=0, t=1)]
    """
    t = Fraction(modulus)
    if t <= 0:
        raise ValueError(f"modulus must be positive, got {t}")

    used = [False] * len(symbols)
    factors: List[ThetaFactor] = []
    free: Dict[PochKey, int] = {}

    for i, x in enumerate(symbols):
        if used[i]:
            continue
        used[i] = True
        if x.is_a_free:
            for key, e in a_free_entries(x, t).items():
                free[key] = free.get(key, 0) + e
            continue

        factor = ThetaFactor(1 if x.sign < 0 else 0, x.aexp, x.qexp, t)
        wanted = factor.partner
        for j in range(i + 1, len(symbols)):
            if not used[j] and symbols[j] == wanted:
                used[j] = True
                break
        else:
            raise UnpairedVariableFactor(describe_symbol(x), i)
        factors.append(factor)

    logger.debug("paired %d symbols at modulus %s into %d factors", len(symbols), t, len(factors))
    return factors, PochQuotient.from_mapping(free)
