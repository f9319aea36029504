from fractions import Fraction

import pytest

from theta.errors import DegenerateShift, DependentGammas, DependentRelations, DimensionMismatch, NotContiguous
from theta.parser import parse_identity, parse_term
from theta.relations import (
    ContiguousRelation,
    MismatchReport,
    RelationSystem,
    apply_shift,
    check_relation_by_series,
    common_relation_system,
    derive_relation,
    lift_shift,
    relation_basis,
)

from conftest import GOLDEN_PROVED, load_identity, load_shifts


def test_ideab_diagonal_shift():
    term = load_identity("ideab").terms[0]
    rel = apply_shift(term, (1, 1))
    assert (rel.rho, rel.w, rel.s) == (1, (1, 1), 0)


def test_prefactor_enters_s():
    term = parse_term("a*[a;q]", ["a"])
    rel = apply_shift(term, (1,))
    # [a q; q] = -a^-1 [a; q] and the prefactor contributes q^1
    assert (rel.rho, rel.w, rel.s) == (1, (1,), -1)


def test_quintuple_auto_relation():
    ident = load_identity("quintuple")
    system = common_relation_system(ident)
    assert isinstance(system, RelationSystem)
    (rel,) = system.relations
    assert rel.alpha == (1,)
    assert (rel.rho, rel.w, rel.s) == (1, (3,), 1)


def test_shift_must_be_contiguous():
    term = load_identity("ideab").terms[2]
    with pytest.raises(NotContiguous) as info:
        apply_shift(term, (1, 0))
    assert info.value.factor_index == 0


def test_shift_length_must_match_variables():
    term = load_identity("ideab").terms[0]
    with pytest.raises(DimensionMismatch, match="5 entries for 2 variables"):
        apply_shift(term, (1, -1, 0, 0, 0))


def test_zero_shift_is_degenerate():
    term = load_identity("ideab").terms[0]
    with pytest.raises(DegenerateShift):
        apply_shift(term, (0, 0))


def test_lift_shift_reaches_all_moduli():
    ident = load_identity("ideab")
    assert lift_shift((1, 0), ident.terms) == (2, 0)
    assert lift_shift((1, 1), ident.terms) == (1, 1)


def test_derive_relation_realizes_k():
    term = load_identity("ideab").terms[2]
    rel = derive_relation(term, (1, 0))
    assert rel.w == (1, 1)
    assert rel.alpha == (Fraction(1), Fraction(1))


def test_derive_relation_needs_independent_gammas():
    term = load_identity("quintuple").terms[0]
    with pytest.raises(DependentGammas):
        derive_relation(term, (1, 0))


def test_relation_basis_with_explicit_shifts():
    ident = load_identity("bailey")
    system = relation_basis(ident.terms[0], load_shifts("bailey"))
    assert len(system) == 4
    assert all(rel.integral_shift for rel in system)


def test_dependent_relations_rejected():
    rel = ContiguousRelation((1, 0), 0, (1, 0), 0)
    twice = ContiguousRelation((2, 0), 0, (2, 0), 0)
    with pytest.raises(DependentRelations):
        RelationSystem((rel, twice))


@pytest.mark.parametrize("name", sorted(GOLDEN_PROVED) + ["quintuple"])
def test_relations_hold_on_series(name):
    ident = load_identity(name)
    system = common_relation_system(ident, load_shifts(name))
    assert isinstance(system, RelationSystem)
    for term in ident.terms:
        for rel in system:
            assert check_relation_by_series(term, rel, order=12)


def test_series_check_rejects_wrong_law():
    term = load_identity("ideab").terms[0]
    rel = apply_shift(term, (1, 1))
    wrong = ContiguousRelation(rel.alpha, 0, rel.w, rel.s)
    assert not check_relation_by_series(term, wrong, order=10)


def test_mismatch_names_the_term():
    ident = parse_identity("vars a b\n[a,-b;q] = [-a,-b;q]")
    report = common_relation_system(ident, [(1, 1), (0, 2)])
    assert isinstance(report, MismatchReport)
    assert report.term_index == 1
    assert report.relation_index == 0
    assert "term 2" in report.describe()
