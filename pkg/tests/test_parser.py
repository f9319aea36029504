from fractions import Fraction

import pytest

from theta.errors import ParseError, ParseErrorKind
from theta.model import PochQuotient, ThetaFactor
from theta.parser import (
    format_identity,
    format_monomial,
    format_relation_ratio,
    format_term,
    parse_candidates,
    parse_identity,
    parse_relations,
    parse_shifts,
    parse_term,
    parse_vector,
    parse_vector_list,
)

from conftest import load_identity


def parse_error(text: str) -> ParseError:
    with pytest.raises(ParseError) as info:
        parse_identity(text)
    return info.value


def test_right_side_is_negated():
    ident = parse_identity("vars z\n[z;q] = [z;q]")
    assert ident.vars == ("z",)
    assert [t.coeff for t in ident.terms] == [1, -1]


def test_ideab_structure():
    ident = load_identity("ideab")
    assert ident.vars == ("a", "b")
    first, second, third = ident.terms
    assert first.factors == (ThetaFactor(0, (1, 0), 0, 1), ThetaFactor(1, (0, 1), 0, 1))
    assert second.factors == (ThetaFactor(1, (1, 0), 0, 1), ThetaFactor(0, (0, 1), 0, 1))
    assert third.coeff == -2
    assert third.poch == PochQuotient.single(1, 2, -2)
    assert [f.t for f in third.factors] == [2, 2]
    assert [f.gamma for f in third.factors] == [(1, 1), (1, -1)]
    assert third.factors[1].z == 1


def test_prefactor_monomial_and_fractional_powers():
    ident = load_identity("extended_riemann")
    term = ident.terms[1]
    assert term.coeff == 4
    assert term.sigma == Fraction(1, 2)
    assert term.kappa == (1, 1, 0, 0)
    rhs = ident.terms[4]
    assert rhs.coeff == -1
    assert rhs.poch == PochQuotient(
        (((Fraction(1, 2), Fraction(1, 2)), 4), ((Fraction(2), Fraction(2)), -4))
    )
    assert {f.z for f in rhs.factors} == {Fraction(1, 4)}
    assert {f.t for f in rhs.factors} == {Fraction(1, 2)}


def test_negative_a_free_argument_is_a_quotient():
    term = parse_term("(-q;q)*[a;q]", ["a"])
    assert term.poch == PochQuotient((((2, 2), 1), ((1, 1), -1)))


@pytest.mark.parametrize("name", ["ideab", "bailey", "extended_riemann", "chu", "whittaker_watson_q2"])
def test_formatted_identity_parses_back(name):
    ident = load_identity(name)
    assert parse_identity(format_identity(ident)) == ident


def test_format_term_of_ideab_right_side():
    ident = load_identity("ideab")
    assert format_term(ident.terms[2].negated(), ident.vars) == "2*(q;q^2)^-2*[a*b,a*q/b;q^2]"


def test_unknown_variable_span():
    err = parse_error("vars a\n[a;q] = [b;q]")
    assert err.kind is ParseErrorKind.UNKNOWN_VARIABLE
    assert (err.span.start, err.span.end) == (16, 17)


def test_spans_are_byte_offsets():
    err = parse_error("vars a\n[a;q] = [θ;q]")
    assert err.kind is ParseErrorKind.UNEXPECTED_TOKEN
    assert (err.span.start, err.span.end) == (16, 18)


@pytest.mark.parametrize(
    "text, kind",
    [
        ("vars a\n(a;q) = [a;q]", ParseErrorKind.UNPAIRED_FACTOR),
        ("vars a\n[a;q] = [a;q", ParseErrorKind.UNBALANCED_DELIMITER),
        ("vars a\n[a^(1/2);q] = [a;q]", ParseErrorKind.BAD_EXPONENT),
        ("vars a\n[a;q^(1/0)] = [a;q]", ParseErrorKind.BAD_EXPONENT),
        ("vars a\n[a;q]^100000000 = [a;q]", ParseErrorKind.BAD_EXPONENT),
        ("vars a\n2*q = [a;q]", ParseErrorKind.EMPTY_PRODUCT),
        ("vars a\n[a;q] = 0", ParseErrorKind.EMPTY_PRODUCT),
        ("[a;q] = [a;q]", ParseErrorKind.UNEXPECTED_TOKEN),
        ("vars a\n[a;q] [a;q]", ParseErrorKind.UNEXPECTED_TOKEN),
        ("vars a\n1/(a,q/a;q) = [a;q]", ParseErrorKind.UNPAIRED_FACTOR),
    ],
)
def test_parse_error_kinds(text, kind):
    assert parse_error(text).kind is kind


def test_vectors_and_shifts():
    assert parse_vector("(1,-1/2,0)") == (1, Fraction(-1, 2), 0)
    assert parse_vector_list("(1,1);(0,2)") == [(1, 1), (0, 2)]
    assert parse_shifts("# shifts\n(1,1)\n\n(0, 2)  # second\n") == [(1, 1), (0, 2)]
    with pytest.raises(ParseError):
        parse_shifts("(1,1)\n(1,2,3)")


def test_relations_file():
    variables, system = parse_relations("vars a b c\n(1,1,1): 1/(a*b*c)\n(2,0,0): -1/(a^2*q)\n")
    assert variables == ("a", "b", "c")
    first, second = system
    assert (first.rho, first.w, first.s) == (0, (1, 1, 1), 0)
    assert (second.rho, second.w, second.s) == (1, (2, 0, 0), 1)


def test_relations_file_rejects_constant_ratio():
    with pytest.raises(ParseError):
        parse_relations("vars a\n(1): 2/a\n")


def test_candidates_file(identities_dir):
    text = (identities_dir / "abc_candidates.cand").read_text(encoding="utf-8")
    variables, candidates = parse_candidates(text)
    assert variables == ("a", "b", "c")
    assert len(candidates) == 6
    assert candidates[0].poch == PochQuotient.single(1, 2, 2)


def test_relation_ratio_text():
    variables, system = parse_relations("vars a b\n(1,1): -1/(a*b)\n")
    assert format_relation_ratio(system.relations[0], variables) == "θ(a*q, b*q)/θ(a, b) = -1/(a*b)"


@pytest.mark.parametrize("coeff, qexp, aexp, expected", [
    (1, 1, (1, -1), "a*q/b"),
    (1, 2, (-1, -1), "q^2/(a*b)"),
    (1, 0, (0, -1), "1/b"),
    (-2, Fraction(1, 2), (0, 0), "-2*q^(1/2)"),
    (Fraction(1, 3), 0, (0, 0), "1/3"),
])
def test_format_monomial(coeff, qexp, aexp, expected):
    assert format_monomial(Fraction(coeff), Fraction(qexp), aexp, ["a", "b"]) == expected
