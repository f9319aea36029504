"""
Verification Certificates
=========================

The machine-readable record of one verification run: the shared relations
with a per-term check table, the generators W, the points of Π_W, one
coefficient check per point and the final status.

Status rules:
- Proved: exact mode, every relation check passed, every residual Zero
- VerifiedToOrder: series mode, or some exact residual only vanishes to order N
- Failed: a relation mismatch or a nonzero residual (see detail)
- Unsupported: the identity is outside what the engine can decide

Related Files:
- theta/prover/verifier.py: builds certificates
- theta/exporters/certificate_json.py: canonical JSON form
- theta/prover/explain.py: human-readable transcript
"""

from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from theta.coefficients.forms import CoefficientForm, VerdictKind, ZeroVerdict
from theta.model.types import IntVector


class Status(Enum):
    PROVED = "Proved"
    VERIFIED_TO_ORDER = "VerifiedToOrder"
    FAILED = "Failed"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class Mode:
    """Exact, or Series(N) for truncated checks to q^N."""
    order: Optional[int] = None

    @property
    def is_exact(self) -> bool:
        return self.order is None

    def __str__(self) -> str:
        return "Exact" if self.order is None else f"Series({self.order})"

    @classmethod
    def parse(cls, text: str) -> "Mode":
        if text == "Exact":
            return cls()
        if text.startswith("Series(") and text.endswith(")"):
            return cls(int(text[len("Series("):-1]))
        raise ValueError(f"unknown certificate mode {text!r}")


EXACT = Mode()


@dataclass(frozen=True)
class RelationCheck:
    """One shared relation and whether each term satisfies it."""
    alpha: Tuple[Fraction, ...]
    rho: int
    w: IntVector
    s: Fraction
    per_term_ok: Tuple[bool, ...]

    @property
    def ok(self) -> bool:
        return all(self.per_term_ok)


@dataclass(frozen=True)
class Check:
    """Coefficient of a^β in every term, their sum and its verdict."""
    beta: IntVector
    terms: Tuple[CoefficientForm, ...]
    residual: CoefficientForm
    verdict: ZeroVerdict


@dataclass
class Certificate:
    identity: str
    mode: Mode
    relations: List[RelationCheck] = field(default_factory=list)
    W: List[IntVector] = field(default_factory=list)
    pi: List[IntVector] = field(default_factory=list)
    checks: List[Check] = field(default_factory=list)
    status: Status = Status.UNSUPPORTED
    detail: str = ""

    @property
    def proved(self) -> bool:
        return self.status is Status.PROVED

    def failing_check(self) -> Optional[Check]:
        for check in self.checks:
            if check.verdict.kind is VerdictKind.NONZERO:
                return check
        return None

    def summary(self) -> str:
        text = self.status.value
        if self.status is Status.VERIFIED_TO_ORDER and self.mode.order is not None:
            text += f" (to q^{self.mode.order})"
        if self.detail:
            text += f": {self.detail}"
        return text
