"""
Integer Normal Forms
====================

Hermite and Smith normal forms of small integer matrices, with the
unimodular transforms that produce them.

This module provides:
- hnf: row-style Hermite normal form H = U·M
- snf: Smith normal form S = U·M·V (wraps sympy's smith_normal_decomp)
- is_unimodular: exact determinant check

HNF convention:
    Row operations only, so H is in row echelon form (upper-staircase).
    Every pivot is positive and the entries above a pivot lie in
    [0, pivot). Zero rows sit at the bottom.

Related Files:
- services/linalg/exact_matrix.py: rational helpers (determinant, inverse)
- theta/lattice/parallelepiped.py: saturation lattice and coset generation
"""

from __future__ import annotations
from typing import List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from .exact_matrix import IntMatrix, determinant


def identity_matrix(n: int) -> IntMatrix:
    """n×n identity as nested lists of ints."""
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _add_rows(m: IntMatrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # replace m[i] by a*m[i] + b*m[j] and m[j] by c*m[i] + d*m[j]
    for k in range(len(m[0]) if m else 0):
        e = m[i][k]
        m[i][k] = a * e + b * m[j][k]
        m[j][k] = c * e + d * m[j][k]


def _gcdex(a: int, b: int) -> Tuple[int, int, int]:
    x, y, g = ZZ.gcdex(ZZ(a), ZZ(b))
    x, y, g = int(x), int(y), int(g)
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


# ============================================================================
# HERMITE NORMAL FORM
# ============================================================================

def hnf(matrix: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix]:
    """
    Row Hermite normal form with transform.

    H is upper triangular: row echelon with positive pivots and entries
    above each pivot reduced modulo it. Its transpose is the lower-triangular
    column form.

    Args:
        matrix: Integer matrix M (m×n)

    Returns:
        (H, U) with H = U·M and det U = ±1

    Example:
        >>> hnf([[1, 1], [0, 2]])[0]
        [[1, 1], [0, 2]]
    """
    h = [[int(v) for v in row] for row in matrix]
    rows = len(h)
    cols = len(h[0]) if h else 0
    u = identity_matrix(rows)

    pivot_row = 0
    for col in range(cols):
        if pivot_row >= rows:
            break
        for i in range(pivot_row + 1, rows):
            if h[i][col] == 0:
                continue
            top = h[pivot_row][col]
            if top == 0:
                h[pivot_row], h[i] = h[i], h[pivot_row]
                u[pivot_row], u[i] = u[i], u[pivot_row]
                continue
            x, y, g = _gcdex(top, h[i][col])
            below = h[i][col] // g
            above = top // g
            # [[x, y], [-below, above]] has determinant 1
            _add_rows(h, pivot_row, i, x, y, -below, above)
            _add_rows(u, pivot_row, i, x, y, -below, above)

        pivot = h[pivot_row][col]
        if pivot == 0:
            continue
        if pivot < 0:
            h[pivot_row] = [-v for v in h[pivot_row]]
            u[pivot_row] = [-v for v in u[pivot_row]]
            pivot = -pivot
        for i in range(pivot_row):
            factor = h[i][col] // pivot
            if factor:
                h[i] = [a - factor * b for a, b in zip(h[i], h[pivot_row])]
                u[i] = [a - factor * b for a, b in zip(u[i], u[pivot_row])]
        pivot_row += 1

    return h, u


# ============================================================================
# SMITH NORMAL FORM
# ============================================================================

def snf(matrix: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Smith normal form with both transforms.

    Args:
        matrix: Integer matrix M (m×n)

    Returns:
        (S, U, V) with S = U·M·V diagonal, d_1 | d_2 | …, all d_i ≥ 0

    Example:
        >>> snf([[2, 4], [4, 8]])[0]
        [[2, 0], [0, 0]]
    """
    rows = len(matrix)
    cols = len(matrix[0]) if matrix else 0
    if rows == 0 or cols == 0:
        return [[0] * cols for _ in range(rows)], identity_matrix(rows), identity_matrix(cols)

    dm = DomainMatrix([[ZZ(int(v)) for v in row] for row in matrix], (rows, cols), ZZ)
    smf, left, right = smith_normal_decomp(dm)
    s = _int_rows(smf)
    u = _int_rows(left)
    v = _int_rows(right)

    for i in range(min(rows, cols)):
        if s[i][i] < 0:
            s[i] = [-x for x in s[i]]
            u[i] = [-x for x in u[i]]
    return s, u, v


def _int_rows(matrix: DomainMatrix) -> List[List[int]]:
    return [[int(x) for x in row] for row in matrix.to_dense().to_list()]


def is_unimodular(matrix: Sequence[Sequence[int]]) -> bool:
    """True iff the square integer matrix has determinant ±1."""
    return abs(determinant(matrix)) == 1
