"""
Exact Matrix Operations
=======================

Rational linear algebra on small dense matrices.

This module provides:
- Rank over Q
- Unique solves of A·x = b (solve_exact, ExactSolver)
- Right null space bases
- Determinants and exact inverses
- Leftmost independent subsets of vectors

Matrices are plain row-major lists of ints or Fractions. The row reduction is
done by sympy's DomainMatrix over QQ, so no entry is ever rounded.

Related Files:
- services/linalg/normal_forms.py: Hermite and Smith normal forms over ZZ
- theta/lattice/parallelepiped.py: coordinates with respect to W
- theta/coefficients/extraction.py: solving Σ n_i·γ_i = β − κ
"""

from __future__ import annotations
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Number = Union[int, Fraction]
IntVector = Tuple[int, ...]
RatVector = Tuple[Fraction, ...]
RatMatrix = List[List[Fraction]]
IntMatrix = List[List[int]]


# ============================================================================
# EXCEPTIONS
# ============================================================================

class ColumnRankDeficient(Exception):
    """
    Raised when a unique solve is requested for a matrix whose columns
    are linearly dependent.
    """
    pass


# ============================================================================
# CONVERSION HELPERS
# ============================================================================

def to_fraction(value) -> Fraction:
    """
    Convert an int, Fraction or sympy ground-domain element to a Fraction.

    Handles python ints, PythonMPQ and gmpy2 mpz/mpq alike, since all of
    them expose ``numerator`` and ``denominator``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def _to_qq(value: Number):
    frac = Fraction(value)
    return QQ(frac.numerator, frac.denominator)


def _qq_matrix(rows: Sequence[Sequence[Number]], ncols: int) -> DomainMatrix:
    data = [[_to_qq(v) for v in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def _fraction_rows(matrix: DomainMatrix) -> RatMatrix:
    return [[to_fraction(v) for v in row] for row in matrix.to_list()]


def _width(rows: Sequence[Sequence[Number]], ncols: Optional[int]) -> int:
    if ncols is not None:
        return ncols
    if not rows:
        raise ValueError("ncols is required for a matrix without rows")
    return len(rows[0])


def rref(
    rows: Sequence[Sequence[Number]],
    ncols: Optional[int] = None,
) -> Tuple[RatMatrix, Tuple[int, ...]]:
    """
    Reduced row echelon form over Q.

    Returns:
        (reduced rows as Fractions, pivot column indices)
    """
    n = _width(rows, ncols)
    if not rows or n == 0:
        return [[Fraction(v) for v in row] for row in rows], ()
    reduced, pivots = _qq_matrix(rows, n).rref()
    return _fraction_rows(reduced), tuple(int(p) for p in pivots)


# ============================================================================
# RANK / SOLVE / KERNEL
# ============================================================================

def rank(rows: Sequence[Sequence[Number]], ncols: Optional[int] = None) -> int:
    """
    Exact rank over the rationals.

    Example:
        >>> rank([[1, 2], [2, 4]])
        1
    """
    _, pivots = rref(rows, ncols)
    return len(pivots)


def kernel_basis(
    rows: Sequence[Sequence[Number]],
    ncols: Optional[int] = None,
) -> List[RatVector]:
    """
    Basis of the right null space {x : A·x = 0}.

    One vector per free column of the reduced echelon form, with that free
    variable set to 1 and the other free variables set to 0, so the basis is
    deterministic.

    Args:
        rows: Matrix A, row-major
        ncols: Column count (required when A has no rows)

    Returns:
        List of length ncols − rank(A)
    """
    n = _width(rows, ncols)
    reduced, pivots = rref(rows, n)
    pivot_set = set(pivots)
    basis: List[RatVector] = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for row_index, pivot in enumerate(pivots):
            vec[pivot] = -reduced[row_index][free]
        basis.append(tuple(vec))
    return basis


def independent_rows(
    vectors: Sequence[Sequence[Number]],
    ncols: Optional[int] = None,
) -> Tuple[int, ...]:
    """
    Indices of a maximal linearly independent subset, chosen greedily from
    the left (leftmost pivot order).
    """
    if not vectors:
        return ()
    n = _width(vectors, ncols)
    transposed = [[vectors[i][j] for i in range(len(vectors))] for j in range(n)]
    _, pivots = rref(transposed, len(vectors))
    return pivots


def determinant(rows: Sequence[Sequence[Number]]) -> Fraction:
    """Exact determinant of a square matrix (1 for the empty matrix)."""
    if not rows:
        return Fraction(1)
    return to_fraction(_qq_matrix(rows, len(rows)).det())


def inverse(rows: Sequence[Sequence[Number]]) -> RatMatrix:
    """
    Exact inverse of a nonsingular square matrix.

    Raises:
        DMNonInvertibleMatrixError: If the matrix is singular (from sympy)
    """
    if not rows:
        return []
    return _fraction_rows(_qq_matrix(rows, len(rows)).inv())


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> List[list]:
    """Plain product of two dense matrices (entries keep their exact type)."""
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum((row[k] * b[k][j] for k in range(inner)), 0) for j in range(cols)]
        for row in a
    ]


class ExactSolver:
    """
    Reusable unique solver for A·x = b with A of full column rank.

    Picks a set of independent rows, inverts that square block once, and
    answers each right-hand side with plain Fraction arithmetic followed by
    a consistency check against the remaining rows.
    """

    def __init__(self, rows: Sequence[Sequence[Number]], ncols: Optional[int] = None):
        self.ncols = _width(rows, ncols)
        self.rows = [[Fraction(v) for v in row] for row in rows]
        if self.ncols == 0:
            self._pivot_rows: Tuple[int, ...] = ()
            self._block_inverse: RatMatrix = []
            return
        pivot_rows = independent_rows(self.rows, self.ncols)
        if len(pivot_rows) < self.ncols:
            raise ColumnRankDeficient(
                f"matrix has rank {len(pivot_rows)} < {self.ncols} columns"
            )
        self._pivot_rows = pivot_rows
        self._block_inverse = inverse([self.rows[i] for i in pivot_rows])

    def solve(self, b: Sequence[Number]) -> Optional[RatVector]:
        """
        Returns:
            The unique x with A·x = b, or None if the system is inconsistent
        """
        rhs = [Fraction(v) for v in b]
        if len(rhs) != len(self.rows):
            raise ValueError("right-hand side length does not match row count")
        picked = [rhs[i] for i in self._pivot_rows]
        x = tuple(
            sum((self._block_inverse[k][j] * picked[j] for j in range(self.ncols)), Fraction(0))
            for k in range(self.ncols)
        )
        for row, target in zip(self.rows, rhs):
            if sum((c * v for c, v in zip(row, x)), Fraction(0)) != target:
                return None
        return x


def solve_exact(rows: Sequence[Sequence[Number]], b: Sequence[Number]) -> Optional[RatVector]:
    """
    Unique solution of A·x = b.

    Args:
        rows: Matrix A (row-major), full column rank
        b: Right-hand side, one entry per row

    Returns:
        x as a tuple of Fractions, or None when the system is inconsistent

    Raises:
        ColumnRankDeficient: If A's columns are dependent

    Example:
        >>> solve_exact([[1, 0], [1, 2]], [0, 1])
        (Fraction(0, 1), Fraction(1, 2))
    """
    return ExactSolver(rows).solve(b)
