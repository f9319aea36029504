import pytest

from services.linalg import rank
from theta.errors import NoCandidatesSurvive
from theta.parser import parse_candidates, parse_relations, parse_term
from theta.prover import DEFAULT_DISCOVERY_ORDER, Status, discover, filter_candidates
from theta.relations import relation_basis

ABC_RELATION = (1, 1, 1, -1, -1, -1)


@pytest.fixture(scope="module")
def abc(identities_dir):
    _, relations = parse_relations((identities_dir / "abc_relations.rel").read_text(encoding="utf-8"))
    variables, candidates = parse_candidates((identities_dir / "abc_candidates.cand").read_text(encoding="utf-8"))
    return relations, variables, candidates


@pytest.fixture
def ideab_relations():
    term = parse_term("(a,-b,q/a,-q/b;q)", ["a", "b"])
    return term, relation_basis(term, [(1, 1), (0, 2)])


def test_abc_candidates_contain_the_known_identity(abc):
    relations, variables, candidates = abc
    result = discover(relations, candidates, variables=variables)
    assert not result.rejections
    assert not result.unverified
    assert len(result.pi) == 4
    vectors = [dep.vector for dep in result.dependencies]
    assert vectors
    assert rank(vectors + [ABC_RELATION], 6) == rank(vectors, 6)
    for dep in result.dependencies:
        assert dep.certificate.status is Status.PROVED
        assert dep.certificate.identity.startswith("vars a b c\n")
        assert next(v for v in dep.vector if v) > 0


def test_duplicate_candidate_gives_one_dependency(ideab_relations):
    term, relations = ideab_relations
    result = discover(relations, [term, term], order=20)
    assert [dep.vector for dep in result.dependencies] == [(1, -1)]
    assert result.dependencies[0].certificate.status is Status.PROVED


def test_single_candidate_has_no_dependency(ideab_relations):
    term, relations = ideab_relations
    result = discover(relations, [term], order=20)
    assert result.dependencies == []
    assert result.unverified == []


def test_violating_candidates_are_rejected(ideab_relations):
    term, relations = ideab_relations
    stranger = parse_term("[a,b;q]", ["a", "b"])
    survivors, rejections = filter_candidates([stranger, term], relations)
    assert [i for i, _ in survivors] == [1]
    assert [i for i, _ in rejections] == [0]
    assert rejections[0][1].startswith("relation 1:")

    with pytest.raises(NoCandidatesSurvive) as info:
        discover(relations, [stranger], order=10)
    assert [i for i, _ in info.value.rejections] == [0]


def test_no_candidates_is_an_error(ideab_relations):
    _, relations = ideab_relations
    with pytest.raises(ValueError):
        discover(relations, [])


def test_default_order():
    assert DEFAULT_DISCOVERY_ORDER == 60
