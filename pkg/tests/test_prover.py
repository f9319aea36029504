import random
from dataclasses import replace

import pytest

from services.config import ModeOverride
from services.utils import get_identities_dir
from theta.coefficients import VerdictKind, extract_exact
from theta.lattice import pi_points
from theta.model import Identity, QMonomial
from theta.parser import parse_identity
from theta.prover import (
    EXACT,
    Mode,
    Status,
    explain,
    propagate_coefficient,
    soundness_gate,
    support_cosets,
    verdict_label,
    verify,
)
from theta.relations import RelationSystem, common_relation_system

from conftest import GOLDEN_PROVED, load_identity, load_shifts


def mutated(name, old, new):
    text = (get_identities_dir({}) / f"{name}.theta").read_text(encoding="utf-8")
    assert old in text
    return parse_identity(text.replace(old, new, 1))


@pytest.mark.parametrize("name, size", sorted(GOLDEN_PROVED.items()))
def test_golden_identities_are_proved(name, size):
    ident = load_identity(name)
    cert = verify(ident, load_shifts(name))
    assert cert.status is Status.PROVED, cert.detail
    assert cert.mode == EXACT
    assert len(cert.pi) == size
    assert len(cert.checks) == size * len(support_cosets(ident, cert.W))
    assert all(check.verdict.is_zero for check in cert.checks)
    assert all(rel.ok for rel in cert.relations)


def test_quintuple_is_verified_to_order():
    cert = verify(load_identity("quintuple"), order=200)
    assert cert.status is Status.VERIFIED_TO_ORDER
    assert cert.mode == Mode(200)
    assert cert.W == [(3,)]
    assert cert.pi == [(0,), (1,), (2,)]
    assert all(check.verdict.kind is VerdictKind.UNKNOWN_TO_ORDER for check in cert.checks)


def test_forced_exact_mode_is_unsupported_for_dependent_factors():
    cert = verify(load_identity("quintuple"), mode="exact")
    assert cert.status is Status.UNSUPPORTED
    assert "exact mode not available" in cert.detail


def test_forced_series_mode_never_proves():
    cert = verify(load_identity("ideab"), load_shifts("ideab"), order=20, mode=ModeOverride.SERIES)
    assert cert.status is Status.VERIFIED_TO_ORDER
    assert cert.mode == Mode(20)
    assert verdict_label(cert) == "verified to order 20"


def test_bailey_sign_flip_fails_at_a_parallelepiped_point():
    ident = mutated("bailey", "- b/a*", "+ b/a*")
    cert = verify(ident, load_shifts("bailey"))
    assert cert.status is Status.FAILED
    failing = cert.failing_check()
    assert failing is not None
    assert failing.beta in {(1, -1, 0, 0, 0), (1, -1, 1, 0, 0)}
    assert failing.verdict.kind is VerdictKind.NONZERO
    assert cert.checks[-1] is failing


@pytest.mark.parametrize(
    "name, old, new",
    [
        ("ideab", "+ (-a", "- (-a"),
        ("ideab", "(a,-b,q/a,-q/b;q)", "(-a,-b,-q/a,-q/b;q)"),
        ("ideab", "= 2*", "= 2*q*"),
        ("chu", "= c*", "= c^2*"),
        ("riemann_addition", "= u/y*", "= 2*u/y*"),
    ],
)
def test_mutations_are_never_proved(name, old, new):
    cert = verify(mutated(name, old, new), load_shifts(name))
    assert cert.status is not Status.PROVED


def single_edits(ident):
    """Term sign flips, δ flips of variable factors and prefactor exponent changes by ±1."""
    edits = []

    def with_term(k, term):
        return Identity(ident.vars, ident.terms[:k] + (term,) + ident.terms[k + 1:])

    first = tuple(1 if j == 0 else 0 for j in range(ident.r))
    for k, term in enumerate(ident.terms):
        edits.append((f"negate term {k}", with_term(k, term.negated())))
        edits.append((f"q*term {k}", with_term(k, replace(term, mono=term.mono * QMonomial(1, 1, (0,) * ident.r)))))
        for d in (1, -1):
            step = QMonomial(1, 0, tuple(d * v for v in first))
            edits.append((f"{ident.vars[0]}^{d}*term {k}", with_term(k, replace(term, mono=term.mono * step))))
        for i, f in enumerate(term.factors):
            if any(f.gamma):
                factors = term.factors[:i] + (replace(f, delta=1 - f.delta),) + term.factors[i + 1:]
                edits.append((f"flip delta {k}.{i}", with_term(k, replace(term, factors=factors))))
    return edits


@pytest.mark.parametrize("name", sorted(GOLDEN_PROVED) + ["quintuple"])
def test_single_edit_mutations_fail(name):
    ident = load_identity(name)
    edits = single_edits(ident)
    assert len(edits) >= 10
    for label, mutant in random.Random(name).sample(edits, 10):
        cert = verify(mutant, load_shifts(name), order=30)
        assert cert.status is Status.FAILED, f"{label}: {cert.status.value} {cert.detail}"


def test_single_term_is_unsupported():
    ident = parse_identity("vars a\n[a;q] = [a;q]")
    lonely = Identity(ident.vars, ident.terms[:1])
    assert verify(lonely).status is Status.UNSUPPORTED


def test_unrefinable_signature_still_decides():
    false = parse_identity("vars a b\n(q^3;q^2)*[a,b;q] = 2*(q^3;q^2)*[a,b;q]")
    cert = verify(false)
    assert cert.status is Status.FAILED, cert.detail
    assert cert.mode == EXACT

    true = parse_identity("vars a b\n(q^3;q^2)*[a,b;q] = (q^3;q^2)*[a,b;q]")
    assert verify(true).status is Status.PROVED


def test_shift_of_wrong_length_is_unsupported():
    cert = verify(load_identity("ideab"), load_shifts("bailey"))
    assert cert.status is Status.UNSUPPORTED
    assert "5 entries for 2 variables" in cert.detail


def test_relation_mismatch_fails():
    ident = parse_identity("vars a b\n[a,-b;q] = [-a,-b;q]")
    cert = verify(ident, [(1, 1), (0, 2)])
    assert cert.status is Status.FAILED
    assert "relation mismatch" in cert.detail
    assert cert.relations and not cert.relations[0].ok


@pytest.mark.parametrize("name", sorted(GOLDEN_PROVED))
def test_propagation_matches_direct_extraction(name):
    ident = load_identity(name)
    system = common_relation_system(ident, load_shifts(name))
    assert isinstance(system, RelationSystem)
    W = list(system.W)
    pi = pi_points(W)
    rng = random.Random(name)
    for _ in range(20):
        beta = rng.choice(pi.points)
        b = [rng.randint(-3, 3) for _ in W]
        eta = tuple(p + sum(bi * w[j] for bi, w in zip(b, W)) for j, p in enumerate(beta))
        for term in ident.terms:
            propagated = propagate_coefficient(extract_exact(term, beta), beta, b, system)
            assert propagated == extract_exact(term, eta)


def test_propagation_step_count_must_match():
    ident = load_identity("ideab")
    system = common_relation_system(ident, load_shifts("ideab"))
    with pytest.raises(ValueError):
        propagate_coefficient(extract_exact(ident.terms[0], (0, 0)), (0, 0), (1,), system)


def test_gate_names_span_mismatch():
    gate = soundness_gate(parse_identity("vars a b\n[a;q] = [b;q]"))
    assert gate.span_mismatches == (1,)
    assert not gate.exact_mode_permitted
    assert any("term 2" in why for why in gate.reasons())


def test_gate_accepts_golden_identity():
    ident = load_identity("bailey")
    system = common_relation_system(ident, load_shifts("bailey"))
    assert soundness_gate(ident, system).exact_mode_permitted


def test_support_cosets():
    ident = parse_identity("vars a b\na*[b;q] = a*[b;q]")
    assert support_cosets(ident, [(0, 1)]) == [(0, 0), (1, 0)]
    assert support_cosets(ident, [(1, 0), (0, 1)]) == [(0, 0)]


def test_proved_transcript():
    cert = verify(load_identity("bailey"), load_shifts("bailey"))
    text = explain(cert)
    assert "Relations:" in text
    assert "Pi_W (4 points)" in text
    assert "θ(" in text
    assert text.rstrip().endswith("Result: proved")


def test_series_transcript_says_order():
    cert = verify(load_identity("quintuple"), order=60)
    assert "Result: verified to order 60" in explain(cert)
    assert "proved" not in explain(cert)


def test_failed_transcript_shows_residual():
    cert = verify(mutated("bailey", "- b/a*", "+ b/a*"), load_shifts("bailey"))
    text = explain(cert)
    assert "Residual at beta = (" in text
    assert text.rstrip().splitlines()[-1].startswith("Result: FAILED")
