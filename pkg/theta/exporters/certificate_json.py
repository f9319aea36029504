"""
Certificate JSON
================

Canonical JSON for certificates.

Schema (field names fixed):
    {identity, mode, relations: [{alpha, rho, w, s, per_term_ok}], W,
     pi: [β...], checks: [{beta, terms: [form...], residual: form, verdict}],
     status, detail}

A form is a list of {constant, q_exponent, signature: [{s, t, exponent}]}.
Every number is written as an exact rational string ("-3/2"), never a float.
Keys are sorted and the text ends with a newline, so parsing an emitted
certificate and serializing it again reproduces the same bytes.

Related Files:
- theta/prover/certificate.py: the value types
- services/storage/certificate_storage.py: atomic file writes
"""

from __future__ import annotations
import json
from fractions import Fraction
from typing import Any, Dict, List

from theta.coefficients.forms import CoeffAtom, CoefficientForm, ZeroVerdict
from theta.model.types import PochQuotient
from theta.prover.certificate import Certificate, Check, Mode, RelationCheck, Status


def _num(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _vec(values) -> List[str]:
    return [_num(v) for v in values]


def _int_vec(values) -> tuple:
    return tuple(int(Fraction(v)) for v in values)


# ============================================================================
# TO JSON
# ============================================================================

def form_to_data(form: CoefficientForm) -> List[Dict[str, Any]]:
    return [
        {
            "constant": _num(atom.c),
            "q_exponent": _num(atom.e),
            "signature": [
                {"s": _num(s), "t": _num(t), "exponent": _num(k)} for (s, t), k in atom.sig
            ],
        }
        for atom in form
    ]


def certificate_to_data(cert: Certificate) -> Dict[str, Any]:
    return {
        "identity": cert.identity,
        "mode": str(cert.mode),
        "relations": [
            {
                "alpha": _vec(rel.alpha),
                "rho": _num(rel.rho),
                "w": _vec(rel.w),
                "s": _num(rel.s),
                "per_term_ok": list(rel.per_term_ok),
            }
            for rel in cert.relations
        ],
        "W": [_vec(w) for w in cert.W],
        "pi": [_vec(p) for p in cert.pi],
        "checks": [
            {
                "beta": _vec(check.beta),
                "terms": [form_to_data(f) for f in check.terms],
                "residual": form_to_data(check.residual),
                "verdict": str(check.verdict),
            }
            for check in cert.checks
        ],
        "status": cert.status.value,
        "detail": cert.detail,
    }


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_data(cert), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ============================================================================
# FROM JSON
# ============================================================================

def form_from_data(data: List[Dict[str, Any]]) -> CoefficientForm:
    atoms = []
    for item in data:
        sig = PochQuotient(tuple(
            ((Fraction(e["s"]), Fraction(e["t"])), int(Fraction(e["exponent"])))
            for e in item["signature"]
        ))
        atoms.append(CoeffAtom(Fraction(item["constant"]), Fraction(item["q_exponent"]), sig))
    return CoefficientForm(tuple(atoms))


def certificate_from_data(data: Dict[str, Any]) -> Certificate:
    """
    Raises:
        KeyError / ValueError: on a document that does not follow the schema
    """
    relations = [
        RelationCheck(
            alpha=tuple(Fraction(v) for v in rel["alpha"]),
            rho=int(rel["rho"]),
            w=_int_vec(rel["w"]),
            s=Fraction(rel["s"]),
            per_term_ok=tuple(bool(ok) for ok in rel["per_term_ok"]),
        )
        for rel in data["relations"]
    ]
    checks = [
        Check(
            beta=_int_vec(check["beta"]),
            terms=tuple(form_from_data(f) for f in check["terms"]),
            residual=form_from_data(check["residual"]),
            verdict=ZeroVerdict.parse(check["verdict"]),
        )
        for check in data["checks"]
    ]
    return Certificate(
        identity=data["identity"],
        mode=Mode.parse(data["mode"]),
        relations=relations,
        W=[_int_vec(w) for w in data["W"]],
        pi=[_int_vec(p) for p in data["pi"]],
        checks=checks,
        status=Status(data["status"]),
        detail=data.get("detail", ""),
    )


def certificate_from_json(text: str) -> Certificate:
    return certificate_from_data(json.loads(text))
