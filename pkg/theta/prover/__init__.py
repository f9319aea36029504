"""Verification, recurrences, discovery and proof transcripts."""

from .certificate import EXACT, Certificate, Check, Mode, RelationCheck, Status
from .gate import GateReport, soundness_gate
from .recurrence import propagate_coefficient, support_cosets
from .verifier import relation_table, verify
from .discovery import DEFAULT_DISCOVERY_ORDER, Dependency, DiscoveryResult, discover, filter_candidates
from .explain import explain, verdict_label

__all__ = [
    "EXACT",
    "Certificate",
    "Check",
    "Mode",
    "RelationCheck",
    "Status",
    "GateReport",
    "soundness_gate",
    "propagate_coefficient",
    "support_cosets",
    "relation_table",
    "verify",
    "DEFAULT_DISCOVERY_ORDER",
    "Dependency",
    "DiscoveryResult",
    "discover",
    "filter_candidates",
    "explain",
    "verdict_label",
]
