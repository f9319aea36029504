from fractions import Fraction

import pytest

from theta.errors import UnpairedVariableFactor
from theta.model import (
    Identity,
    PochQuotient,
    QMonomial,
    ThetaFactor,
    ThetaTerm,
)
from theta.model.pairing import a_free_entries, pair_pochhammers
from theta.model.types import identity_denominator, term_variables
from theta.model.validation import exponent_space, primitive, spans_equal, validate_term

from conftest import load_identity


def mono(sign, qexp, *aexp):
    return QMonomial(sign, Fraction(qexp), tuple(aexp))


def test_poch_quotient_is_canonical():
    a = PochQuotient((((1, 2), 1), ((1, 1), -2), ((1, 2), -1)))
    b = PochQuotient.single(1, 1, -2)
    assert a == b
    assert a.moduli() == (Fraction(1),)
    assert not PochQuotient()


def test_poch_quotient_rejects_nonpositive_keys():
    with pytest.raises(ValueError):
        PochQuotient.single(0, 1)


def test_theta_factor_partner():
    f = ThetaFactor(1, (1, -1), Fraction(1, 2), 2)
    assert f.argument == mono(-1, Fraction(1, 2), 1, -1)
    assert f.partner == mono(-1, Fraction(3, 2), -1, 1)


def test_pairing_matches_partner_symbols():
    symbols = [mono(1, 0, -1, 1), mono(1, 1, 1, -1)]
    factors, free = pair_pochhammers(symbols, Fraction(1))
    assert factors == [ThetaFactor(0, (-1, 1), 0, 1)]
    assert not free


def test_pairing_collects_a_free_symbols():
    symbols = [mono(1, 1, 0), mono(1, 0, 1), mono(1, 1, -1)]
    factors, free = pair_pochhammers(symbols, Fraction(1))
    assert len(factors) == 1
    assert free == PochQuotient.single(1, 1)


def test_pairing_reports_unpaired_symbol():
    with pytest.raises(UnpairedVariableFactor) as info:
        pair_pochhammers([mono(1, 0, 1), mono(1, 1, 1)], Fraction(1))
    assert info.value.index == 0


def test_negative_a_free_symbol_becomes_quotient():
    assert a_free_entries(mono(-1, 1, 0), Fraction(1)) == {
        (Fraction(2), Fraction(2)): 1,
        (Fraction(1), Fraction(1)): -1,
    }


def test_identity_checks_variable_count():
    term = ThetaTerm(1, mono(1, 0, 0), factors=(ThetaFactor(0, (1,), 0, 1),))
    with pytest.raises(ValueError):
        Identity(("a", "b"), (term, term))


def test_identity_denominator_collects_fractional_exponents():
    ident = load_identity("extended_riemann")
    assert identity_denominator(ident) == 4
    assert identity_denominator(ident, Fraction(1, 3)) == 12


def test_term_variables():
    term = ThetaTerm(1, mono(1, 0, 0, 0, 1), factors=(ThetaFactor(0, (1, 0, 0), 0, 1),))
    assert term_variables(term) == (0, 2)


def test_primitive_keeps_direction():
    assert primitive([Fraction(2), Fraction(-4)]) == (1, -2)
    assert primitive([Fraction(-1, 2), Fraction(1, 3)]) == (-3, 2)
    assert primitive([0, 0]) == (0, 0)


def test_exponent_space_and_span_equality():
    ident = load_identity("ideab")
    spaces = [exponent_space(t) for t in ident.terms]
    assert all(len(space) == 2 for space in spaces)
    assert spans_equal(spaces[0], spaces[2], 2)
    assert not spans_equal([(1, 0)], [(0, 1)], 2)


def test_validation_of_golden_terms():
    for name in ("ideab", "bailey", "chu"):
        ident = load_identity(name)
        assert all(validate_term(t, ident.r).exact_mode_eligible for t in ident.terms)


def test_quintuple_term_has_dependent_gammas():
    ident = load_identity("quintuple")
    report = validate_term(ident.terms[0], 1)
    assert not report.gammas_independent
    assert not report.exact_mode_eligible
    assert any("dependent" in why for why in report.reasons())
