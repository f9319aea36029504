import itertools
import math
import random

import pytest

from services.linalg import rank, snf
from theta.errors import DependentW, NotInSpan
from theta.lattice import decompose, in_parallelepiped, pi_points, pi_points_box_oracle, saturation_basis
from theta.relations import RelationSystem, common_relation_system

from conftest import GOLDEN_PROVED, load_identity, load_shifts

BAILEY_PI = {(0, 0, 0, 0, 0), (0, 0, 1, 0, 0), (1, -1, 0, 0, 0), (1, -1, 1, 0, 0)}
CHU_PI = {(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (2, 0, 0, -1)}


def golden_W(name):
    system = common_relation_system(load_identity(name), load_shifts(name))
    assert isinstance(system, RelationSystem)
    return list(system.W)


def random_independent_W(rng):
    r = rng.randint(1, 4)
    d = rng.randint(1, r)
    while True:
        W = [tuple(rng.randint(-3, 3) for _ in range(r)) for _ in range(d)]
        if rank(W, r) == d:
            return W


def test_two_variable_example():
    pi = pi_points([(1, 1), (0, 2)])
    assert pi.points == ((0, 0), (0, 1))
    assert pi.saturation_index == 2


def test_one_dimensional():
    assert pi_points([(3,)]).points == ((0,), (1,), (2,))
    assert pi_points_box_oracle([(3,)]).points == ((0,), (1,), (2,))


def test_doubled_standard_basis():
    W = [tuple(2 if i == j else 0 for j in range(4)) for i in range(4)]
    pi = pi_points(W)
    assert set(pi) == set(itertools.product((0, 1), repeat=4))


def test_bailey_and_chu_listings():
    assert set(pi_points(golden_W("bailey"))) == BAILEY_PI
    assert set(pi_points(golden_W("chu"))) == CHU_PI


@pytest.mark.parametrize("name, size", sorted(GOLDEN_PROVED.items()))
def test_golden_sizes_match_box_oracle(name, size):
    W = golden_W(name)
    pi = pi_points(W)
    assert len(pi) == size
    assert pi.points == pi_points_box_oracle(W).points


def test_random_matrices_match_box_oracle_and_snf():
    rng = random.Random(20240611)
    for _ in range(200):
        W = random_independent_W(rng)
        pi = pi_points(W)
        assert pi.points == pi_points_box_oracle(W).points
        basis = saturation_basis(W)
        assert len(basis) == len(W)
        assert all(in_parallelepiped(p, W) for p in pi)
        S, _, _ = snf(W)
        assert len(pi) == math.prod(S[i][i] for i in range(len(W)))
        assert all(snf(basis)[0][i][i] == 1 for i in range(len(W)))


def test_dependent_W_rejected():
    with pytest.raises(DependentW):
        pi_points([(1, 0), (2, 0)])
    with pytest.raises(DependentW):
        pi_points_box_oracle([(1, 1), (-1, -1)])


def test_decompose_examples():
    W = [(1, 1), (0, 2)]
    assert decompose((0, 0), W) == ((0, 0), (0, 0))
    assert decompose((2, 2), W) == ((0, 0), (2, 0))
    with pytest.raises(NotInSpan):
        decompose((1, 0), [(0, 1)])


@pytest.mark.parametrize("name", ["ideab", "bailey", "chu", "whittaker_watson"])
def test_decompose_recomposes(name):
    W = golden_W(name)
    pi = pi_points(W)
    rng = random.Random(name)
    for _ in range(1000):
        base = rng.choice(pi.points)
        b = [rng.randint(-4, 4) for _ in W]
        gamma = tuple(p + sum(bi * w[j] for bi, w in zip(b, W)) for j, p in enumerate(base))
        beta, steps = decompose(gamma, W)
        assert beta == base
        assert list(steps) == b
        assert beta in pi
    for beta in pi:
        assert decompose(beta, W) == (beta, (0,) * len(W))


def test_saturation_basis_divides_out_common_factor():
    assert saturation_basis([(2, 2)]) == [(1, 1)]
