"""
Proof transcripts.

Renders a certificate as text: the shared relations in ratio form, the
points of Π_W, one coefficient table row per checked β, and the verdict.
Series-mode certificates are labelled "verified to order N", never "proved".
"""

from __future__ import annotations
from typing import List, Sequence

import pandas as pd

from theta.parser.formatter import format_form, format_rational, format_relation_ratio
from theta.prover.certificate import Certificate, Status
from theta.relations.types import ContiguousRelation

MAX_CELL = 60


def certificate_variables(cert: Certificate) -> List[str]:
    header = cert.identity.splitlines()[0].split() if cert.identity else []
    return header[1:] if header[:1] == ["vars"] else []


def _clip(text: str) -> str:
    return text if len(text) <= MAX_CELL else text[: MAX_CELL - 3] + "..."


def _vector(v: Sequence) -> str:
    return "(" + ",".join(format_rational(x) for x in v) + ")"


def verdict_label(cert: Certificate) -> str:
    if cert.status is Status.PROVED:
        return "proved"
    if cert.status is Status.VERIFIED_TO_ORDER:
        order = cert.mode.order
        return f"verified to order {order}" if order is not None else "verified to a finite order"
    if cert.status is Status.FAILED:
        return "FAILED"
    return "unsupported"


def relations_frame(cert: Certificate) -> pd.DataFrame:
    variables = certificate_variables(cert)
    rows = []
    for j, rel in enumerate(cert.relations, start=1):
        law = ContiguousRelation(rel.alpha, rel.rho, rel.w, rel.s)
        rows.append({
            "#": j,
            "shift": _vector(rel.alpha),
            "ratio": format_relation_ratio(law, variables),
            "terms ok": "".join("+" if ok else "x" for ok in rel.per_term_ok),
        })
    return pd.DataFrame(rows, columns=["#", "shift", "ratio", "terms ok"])


def checks_frame(cert: Certificate) -> pd.DataFrame:
    n_terms = max((len(c.terms) for c in cert.checks), default=0)
    columns = ["beta"] + [f"term {k + 1}" for k in range(n_terms)] + ["residual", "verdict"]
    rows = []
    for check in cert.checks:
        row = {"beta": _vector(check.beta)}
        for k, form in enumerate(check.terms):
            row[f"term {k + 1}"] = _clip(format_form(form))
        row["residual"] = _clip(format_form(check.residual))
        row["verdict"] = str(check.verdict)
        rows.append(row)
    return pd.DataFrame(rows, columns=columns)


def explain(cert: Certificate) -> str:
    """
    Human-readable transcript of a certificate.

    Example:
        A failed certificate ends with the residual at the failing β.
    """
    lines: List[str] = ["Identity:"]
    lines.extend("  " + line for line in cert.identity.splitlines())
    lines.append(f"Mode: {cert.mode}")

    if cert.relations:
        lines.append("")
        lines.append("Relations:")
        lines.append(relations_frame(cert).to_string(index=False))
    if cert.W:
        lines.append("")
        lines.append("W = " + ", ".join(_vector(w) for w in cert.W))
    if cert.pi:
        lines.append(f"Pi_W ({len(cert.pi)} points): " + ", ".join(_vector(p) for p in cert.pi))
    if cert.checks:
        lines.append("")
        lines.append("Coefficient checks:")
        lines.append(checks_frame(cert).to_string(index=False))

    failing = cert.failing_check()
    if failing is not None:
        lines.append("")
        lines.append(f"Residual at beta = {_vector(failing.beta)}:")
        for atom_text in format_form(failing.residual).replace(" - ", "\n- ").replace(" + ", "\n+ ").splitlines():
            lines.append("  " + atom_text)

    lines.append("")
    result = f"Result: {verdict_label(cert)}"
    if cert.detail:
        result += f" ({cert.detail})"
    lines.append(result)
    return "\n".join(lines) + "\n"
