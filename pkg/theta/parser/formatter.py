"""
Canonical text for model values.

Everything printed here re-parses to an equal value. Monomials list
variables in declaration order, then q; theta factors print as bracket lists
grouped by consecutive modulus; a-free quotients print as (q^s;q^t)^e.
"""

from __future__ import annotations
from fractions import Fraction
from typing import List, Sequence

from theta.coefficients.forms import CoefficientForm
from theta.model.types import Identity, PochQuotient, QMonomial, ThetaFactor, ThetaTerm
from theta.relations.types import ContiguousRelation


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _power(base: str, e: Fraction) -> str:
    e = Fraction(e)
    if e == 1:
        return base
    if e.denominator == 1:
        return f"{base}^{e.numerator}"
    return f"{base}^({e.numerator}/{e.denominator})"


def format_monomial(coeff: Fraction, qexp: Fraction, aexp: Sequence[int], variables: Sequence[str]) -> str:
    """
    Render coeff · a^aexp · q^qexp.

    Examples:
        "a*q/b", "q^2/(a*b)", "1/b", "-2*q^(1/2)"
    """
    coeff = Fraction(coeff)
    num: List[str] = []
    den: List[str] = []
    if abs(coeff.numerator) != 1:
        num.append(str(abs(coeff.numerator)))
    if coeff.denominator != 1:
        den.append(str(coeff.denominator))
    for name, e in zip(variables, aexp):
        if e > 0:
            num.append(_power(name, Fraction(e)))
        elif e < 0:
            den.append(_power(name, Fraction(-e)))
    qexp = Fraction(qexp)
    if qexp > 0:
        num.append(_power("q", qexp))
    elif qexp < 0:
        den.append(_power("q", -qexp))

    text = "*".join(num) or "1"
    if den:
        text += "/" + (den[0] if len(den) == 1 else "(" + "*".join(den) + ")")
    return f"-{text}" if coeff < 0 else text


def format_symbol(mono: QMonomial, variables: Sequence[str]) -> str:
    return format_monomial(Fraction(mono.sign), mono.qexp, mono.aexp, variables)


def format_modulus(t: Fraction) -> str:
    return _power("q", Fraction(t))


def format_quotient(poch: PochQuotient) -> List[str]:
    parts = []
    for (s, t), e in poch:
        base = f"({_power('q', s)};{format_modulus(t)})"
        parts.append(base if e == 1 else f"{base}^{e}")
    return parts


def format_factors(factors: Sequence[ThetaFactor], variables: Sequence[str]) -> List[str]:
    """Bracket lists, one per run of consecutive factors with equal modulus."""
    parts: List[str] = []
    run: List[ThetaFactor] = []
    for factor in list(factors) + [None]:
        if run and (factor is None or factor.t != run[0].t):
            entries = ",".join(format_symbol(f.argument, variables) for f in run)
            parts.append(f"[{entries};{format_modulus(run[0].t)}]")
            run = []
        if factor is not None:
            run.append(factor)
    return parts


def format_term(term: ThetaTerm, variables: Sequence[str]) -> str:
    """
    Canonical text of one term.

    Example:
        the right side of the two-variable example prints as
        "2*(q;q^2)^-2*[a*b,a*q/b;q^2]"
    """
    prefix = format_monomial(term.signed_coeff, term.sigma, term.kappa, variables)
    body = format_quotient(term.poch) + format_factors(term.factors, variables)
    if prefix == "1":
        return "*".join(body)
    if prefix == "-1":
        return "-" + "*".join(body)
    return "*".join([prefix] + body)


def format_identity(identity: Identity) -> str:
    """`vars` header, then all terms on one line with "= 0"."""
    pieces: List[str] = []
    for k, term in enumerate(identity.terms):
        if k == 0:
            pieces.append(format_term(term, identity.vars))
        elif term.signed_coeff < 0:
            pieces.append("- " + format_term(term.negated(), identity.vars))
        else:
            pieces.append("+ " + format_term(term, identity.vars))
    return f"vars {' '.join(identity.vars)}\n{' '.join(pieces)} = 0"


def format_relation_ratio(relation: ContiguousRelation, variables: Sequence[str]) -> str:
    """
    θ(a∘q^α)/θ(a) as a signed monomial.

    Example:
        "θ(a*q, b*q)/θ(a, b) = -1/(a*b)"
    """
    shifted = []
    for j, alpha in enumerate(relation.alpha):
        unit = tuple(1 if k == j else 0 for k in range(len(variables)))
        shifted.append(format_monomial(Fraction(1), alpha, unit, variables))
    ratio = format_monomial(
        Fraction(-1 if relation.rho else 1), -relation.s, tuple(-v for v in relation.w), variables
    )
    return f"θ({', '.join(shifted)})/θ({', '.join(variables)}) = {ratio}"


def format_form(form: CoefficientForm) -> str:
    """
    A coefficient form as a sum of c*q^e*(q^s;q^t)^k atoms ("0" when empty).

    Example:
        "-q*(q;q)^-4"
    """
    pieces: List[str] = []
    for atom in form:
        prefix = format_monomial(atom.c, atom.e, (), ())
        body = format_quotient(atom.sig)
        if not body:
            text = prefix
        elif prefix in ("1", "-1"):
            text = prefix[:-1] + "*".join(body)
        else:
            text = "*".join([prefix] + body)
        if not pieces:
            pieces.append(text)
        elif text.startswith("-"):
            pieces.append("- " + text[1:])
        else:
            pieces.append("+ " + text)
    return " ".join(pieces) or "0"
