from fractions import Fraction

import pytest

from theta.coefficients import (
    NONZERO,
    ZERO,
    CoeffAtom,
    CoefficientForm,
    VerdictKind,
    ZeroVerdict,
    cf_canonicalize,
    cf_is_zero,
    cf_scale,
    cf_sum,
    cf_to_series,
    extract_exact,
    rational_lcm,
    refine_signature,
    series_to_form,
)
from theta.errors import DependentGammas, UnnormalizableSignature
from theta.model import PochQuotient, identity_denominator
from theta.series import euler_expand, expand_term, series_inv, series_monomial, series_pow

from conftest import load_identity

INV4 = PochQuotient.single(1, 1, -4)

# (beta, term index) -> (constant, q exponent) over (q;q)^-4, terms as stored
BAILEY_TABLE = {
    ((0, 0, 0, 0, 0), 0): (1, 0),
    ((0, 0, 0, 0, 0), 1): (-1, 0),
    ((0, 0, 0, 0, 0), 2): None,
    ((1, -1, 0, 0, 0), 0): (-1, 1),
    ((1, -1, 0, 0, 0), 1): None,
    ((1, -1, 0, 0, 0), 2): (1, 1),
    ((1, -1, 1, 0, 0), 0): None,
    ((1, -1, 1, 0, 0), 1): (1, 2),
    ((1, -1, 1, 0, 0), 2): (-1, 2),
    ((0, 0, 1, 0, 0), 0): None,
    ((0, 0, 1, 0, 0), 1): None,
    ((0, 0, 1, 0, 0), 2): None,
}


@pytest.mark.parametrize("key, expected", sorted(BAILEY_TABLE.items()))
def test_bailey_coefficient_table(key, expected):
    beta, k = key
    form = extract_exact(load_identity("bailey").terms[k], beta)
    if expected is None:
        assert form.is_empty
    else:
        c, e = expected
        assert form == CoefficientForm.single(c, e, INV4)


CHU_TABLE = {
    ((0, 0, 0, 0), 0): (1, 0),
    ((0, 0, 0, 0), 1): (-1, 0),
    ((0, 0, 0, 0), 2): None,
    ((1, 0, 0, 0), 0): None,
    ((1, 0, 0, 0), 1): None,
    ((1, 0, 0, 0), 2): None,
    ((0, 1, 0, 0), 0): None,
    ((0, 1, 0, 0), 1): (1, 0),
    ((0, 1, 0, 0), 2): (-1, 0),
    ((2, 0, 0, -1), 0): (-1, 2),
    ((2, 0, 0, -1), 1): None,
    ((2, 0, 0, -1), 2): (1, 2),
}


@pytest.mark.parametrize("key, expected", sorted(CHU_TABLE.items()))
def test_chu_coefficient_table(key, expected):
    beta, k = key
    form = extract_exact(load_identity("chu").terms[k], beta)
    if expected is None:
        assert form.is_empty
    else:
        c, e = expected
        assert form == CoefficientForm.single(c, e, INV4)


@pytest.mark.parametrize("beta", [(0, 0, 0, 0, 0), (1, -1, 0, 0, 0), (1, -1, 1, 0, 0), (0, 0, 1, 0, 0)])
def test_bailey_residuals_are_zero(beta):
    ident = load_identity("bailey")
    residual = cf_sum([extract_exact(t, beta) for t in ident.terms])
    assert residual.is_empty
    assert cf_is_zero(residual) == ZERO


def test_ideab_base_point_needs_canonical_split():
    ident = load_identity("ideab")
    forms = [extract_exact(t, (0, 0)) for t in ident.terms]
    assert forms[2] == CoefficientForm.single(-2, 0, PochQuotient(
        (((1, 2), -2), ((2, 2), -2))
    ))
    assert cf_sum(forms, canonical=False).signatures() != ()
    assert cf_sum(forms).is_empty


def test_ideab_half_integer_solution_vanishes():
    term = load_identity("ideab").terms[2]
    assert extract_exact(term, (0, 1)).is_empty


def test_canonical_split_of_modulus():
    form = CoefficientForm.single(-2, 0, PochQuotient.single(1, 1))
    split = cf_canonicalize(form, Fraction(2))
    assert split == CoefficientForm.single(-2, 0, PochQuotient((((1, 2), 1), ((2, 2), 1))))
    assert cf_canonicalize(split, Fraction(2)) == split


def test_canonicalize_preserves_series():
    form = CoefficientForm((
        CoeffAtom(3, 1, PochQuotient.single(1, 1, -1)),
        CoeffAtom(-1, Fraction(1, 2), PochQuotient.single(Fraction(1, 2), Fraction(3, 2), 2)),
    ))
    canonical = cf_canonicalize(form)
    assert cf_to_series(canonical, 20, 2) == cf_to_series(form, 20, 2)


def test_refine_rejects_incompatible_modulus():
    with pytest.raises(UnnormalizableSignature):
        refine_signature(PochQuotient.single(1, 2), Fraction(3))
    with pytest.raises(UnnormalizableSignature):
        refine_signature(PochQuotient.single(3, 1), Fraction(2))


def test_rational_lcm():
    assert rational_lcm([Fraction(1, 2), Fraction(1), Fraction(3, 2)]) == 3
    assert rational_lcm([]) is None


def test_sum_is_commutative_and_cancels():
    a = CoefficientForm.single(1, 2, INV4)
    b = CoefficientForm.single(Fraction(1, 3), 0, PochQuotient.single(1, 2, -1))
    assert cf_sum([a, b]) == cf_sum([b, a])
    assert (a + (-a)).is_empty
    assert cf_scale(a, 0).is_empty
    assert cf_scale(a, 2, 1) == CoefficientForm.single(2, 3, INV4)


def test_zero_decisions():
    assert cf_is_zero(CoefficientForm.zero()) == ZERO
    assert cf_is_zero(CoefficientForm.single(1, 0)) == NONZERO
    same_sig = CoefficientForm((CoeffAtom(1, 0, INV4), CoeffAtom(-1, 1, INV4)))
    assert cf_is_zero(same_sig) == NONZERO


def test_unknown_to_order_without_canonicalization():
    form = CoefficientForm((
        CoeffAtom(1, 0, PochQuotient.single(1, 1)),
        CoeffAtom(-1, 0, PochQuotient((((1, 2), 1), ((2, 2), 1)))),
    ))
    verdict = cf_is_zero(form, 100, canonicalize=False)
    assert verdict == ZeroVerdict(VerdictKind.UNKNOWN_TO_ORDER, 100)
    assert str(verdict) == "UnknownToOrder(100)"
    assert cf_is_zero(form) == ZERO


def test_verdict_text_round_trip():
    for verdict in (ZERO, NONZERO, ZeroVerdict(VerdictKind.UNKNOWN_TO_ORDER, 40)):
        assert ZeroVerdict.parse(str(verdict)) == verdict


def test_partition_series():
    series = cf_to_series(CoefficientForm.single(1, 0, PochQuotient.single(1, 1, -1)), 10)
    assert [series.coefficient(k) for k in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert cf_to_series(CoefficientForm.zero(), 10).is_zero


def test_dependent_gammas_refused():
    term = load_identity("quintuple").terms[0]
    with pytest.raises(DependentGammas):
        extract_exact(term, (0,))


@pytest.mark.parametrize("name", ["ideab", "bailey", "chu", "extended_riemann", "whittaker_watson_q2"])
def test_exact_extraction_matches_expansion(name):
    ident = load_identity(name)
    D = identity_denominator(ident)
    order = 12
    betas = [(0,) * ident.r, tuple(1 if j == 0 else 0 for j in range(ident.r))]
    for term in ident.terms:
        expansion = expand_term(term, order, D)
        for beta in betas + list(expansion)[:6]:
            exact = cf_to_series(extract_exact(term, beta), order, D)
            assert exact == expansion.entry(beta)


def test_bailey_base_series_is_inverse_fourth_power():
    form = extract_exact(load_identity("bailey").terms[0], (0, 0, 0, 0, 0))
    expected = series_pow(series_inv(euler_expand(1, 1, 25, 1)), 4)
    assert cf_to_series(form, 25).coeffs == expected.coeffs


def test_series_to_form_keeps_each_coefficient():
    series = series_monomial(3, 1, 2, 10) + series_monomial(-1, Fraction(1, 2), 2, 10)
    form = series_to_form(series)
    assert form == CoefficientForm((CoeffAtom(3, 1), CoeffAtom(-1, Fraction(1, 2))))
    assert all(atom.sig == PochQuotient() for atom in form)
    assert series_to_form(series_monomial(0, 0, 1, 5)).is_empty
