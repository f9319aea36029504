from fractions import Fraction

import pytest

from services.linalg import (
    ColumnRankDeficient,
    ExactSolver,
    determinant,
    hnf,
    independent_rows,
    inverse,
    is_unimodular,
    kernel_basis,
    matmul,
    rank,
    snf,
    solve_exact,
)


def test_rank_and_kernel():
    rows = [[1, 2, 3], [2, 4, 6]]
    assert rank(rows) == 1
    basis = kernel_basis(rows)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in rows)


def test_kernel_of_empty_matrix_needs_width():
    assert kernel_basis([], 2) == [(1, 0), (0, 1)]
    with pytest.raises(ValueError):
        kernel_basis([])


def test_solve_exact_unique_and_inconsistent():
    assert solve_exact([[1, 0], [1, 2]], [0, 1]) == (Fraction(0), Fraction(1, 2))
    assert solve_exact([[1], [1]], [1, 2]) is None
    with pytest.raises(ColumnRankDeficient):
        solve_exact([[1, 1], [2, 2]], [1, 2])


def test_solver_reuse_on_tall_matrix():
    solver = ExactSolver([[1, 0], [0, 1], [1, 1]])
    assert solver.solve([2, 3, 5]) == (2, 3)
    assert solver.solve([2, 3, 6]) is None


def test_independent_rows_is_leftmost():
    assert independent_rows([(1, 0), (2, 0), (0, 1)], 2) == (0, 2)


def test_determinant_and_inverse():
    m = [[2, 1], [1, 1]]
    assert determinant(m) == 1
    assert matmul(m, inverse(m)) == [[1, 0], [0, 1]]


def test_hnf_is_row_echelon_with_reduced_entries():
    M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    H, U = hnf(M)
    assert matmul(U, M) == H
    assert is_unimodular(U)
    pivots = []
    for row in H:
        nonzero = [j for j, v in enumerate(row) if v]
        if nonzero:
            pivots.append(nonzero[0])
    assert pivots == sorted(pivots)
    for i, col in enumerate(pivots):
        assert H[i][col] > 0
        for above in range(i):
            assert 0 <= H[above][col] < H[i][col]


def test_hnf_of_primitive_vector():
    H, _ = hnf([[2, 2], [1, 1]])
    assert H == [[1, 1], [0, 0]]


def test_snf_divisibility_and_transform():
    M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    S, U, V = snf(M)
    assert matmul(matmul(U, M), V) == S
    diagonal = [S[i][i] for i in range(3)]
    assert diagonal == [2, 6, 12]
    assert is_unimodular(U) and is_unimodular(V)


def test_snf_rank_deficient():
    S, _, _ = snf([[2, 4], [4, 8]])
    assert S == [[2, 0], [0, 0]]
