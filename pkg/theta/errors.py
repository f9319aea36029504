"""
Theta Errors
============

Exception hierarchy for the theta identity engine.

Every failure that is not a plain programming error derives from
ThetaError, so the CLI can catch one base class and map it to an exit code.
Mathematical failure of an identity is NOT an exception: it is recorded in
the certificate status (see theta/prover/certificate.py).

Related Files:
- services/linalg/exact_matrix.py: ColumnRankDeficient (linear algebra layer)
- theta/cli/commands.py: maps these errors to diagnostics and exit codes
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple


class ThetaError(Exception):
    """Base class for all theta engine errors."""
    pass


# ============================================================================
# MODEL / PARSER
# ============================================================================

@dataclass(frozen=True)
class SourceSpan:
    """Byte offsets [start, end) into the parsed input."""
    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError(f"span start {self.start} after end {self.end}")


class ParseErrorKind(Enum):
    """What went wrong while reading a `.theta` style file."""
    UNEXPECTED_TOKEN = "UnexpectedToken"
    BAD_EXPONENT = "BadExponent"
    UNKNOWN_VARIABLE = "UnknownVariable"
    EMPTY_PRODUCT = "EmptyProduct"
    UNBALANCED_DELIMITER = "UnbalancedDelimiter"
    UNPAIRED_FACTOR = "UnpairedFactor"


class ParseError(ThetaError):
    """Raised by every parser entry point; carries the offending span."""

    def __init__(self, kind: ParseErrorKind, span: SourceSpan, message: str):
        super().__init__(f"{kind.value} at {span.start}..{span.end}: {message}")
        self.kind = kind
        self.span = span
        self.message = message


class UnpairedVariableFactor(ThetaError):
    """A Pochhammer symbol depending on the variables has no partner q^t/x."""

    def __init__(self, symbol: str, index: Optional[int] = None):
        super().__init__(f"no partner for Pochhammer symbol {symbol}")
        self.symbol = symbol
        self.index = index


class DependentGammas(ThetaError):
    """The factor exponent vectors of a term are linearly dependent."""
    pass


# ============================================================================
# RELATIONS / LATTICE
# ============================================================================

class NotContiguous(ThetaError):
    """A shift does not move some factor by an integer multiple of its modulus."""

    def __init__(self, factor_index: int, detail: str = ""):
        message = f"shift is not contiguous for factor {factor_index}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.factor_index = factor_index


class DimensionMismatch(ThetaError):
    """A shift or weight vector has the wrong number of entries."""
    pass


class DegenerateShift(ThetaError):
    """Zero shift, or a shift whose exponent vector w is zero."""
    pass


class DependentRelations(ThetaError):
    """The w vectors of a relation system are linearly dependent."""
    pass


class NoNonzeroEpsilon(ThetaError):
    """Every solution of the relation equations has ε = 0."""
    pass


class DependentW(ThetaError):
    """The generators of a parallelepiped are linearly dependent."""
    pass


class NotInSpan(ThetaError):
    """A lattice vector is outside the rational span of W."""
    pass


# ============================================================================
# SERIES / COEFFICIENT FORMS
# ============================================================================

class BadDenominator(ThetaError):
    """An exponent is not representable in q^(1/D)."""
    pass


class NonUnitLeadingTerm(ThetaError):
    """Series inversion of a series whose lowest term is zero or unknown."""
    pass


class UnnormalizableSignature(ThetaError):
    """A Pochhammer signature cannot be brought to the canonical modulus."""
    pass


# ============================================================================
# DISCOVERY
# ============================================================================

class NoCandidatesSurvive(ThetaError):
    """Every discovery candidate violated at least one relation."""

    def __init__(self, rejections: List[Tuple[int, str]]):
        lines = "; ".join(f"candidate {i + 1}: {why}" for i, why in rejections)
        super().__init__(f"no candidate satisfies the relations ({lines})")
        self.rejections = rejections
