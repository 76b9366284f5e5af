"""Exact dense linear algebra over Q(i), on sympy's DomainMatrix.

Matrices travel through the package as lists of rows of `GaussianRational`.
Each operation converts its arguments to a DomainMatrix over QQ_I, does the
work there, and converts the answer back.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..exactnum.numbers import ONE, ZERO, GaussianRational

logger = logging.getLogger(__name__)

Matrix = List[List[GaussianRational]]
Vector = List[GaussianRational]


def to_domain(value):
    """A scalar as an element of QQ_I."""
    z = GaussianRational.coerce(value)
    return QQ_I(QQ(z.re.numerator, z.re.denominator), QQ(z.im.numerator, z.im.denominator))


def _fraction(q) -> Fraction:
    return Fraction(int(QQ.numer(q)), int(QQ.denom(q)))


def from_domain(element) -> GaussianRational:
    return GaussianRational(_fraction(element.x), _fraction(element.y))


def to_domain_matrix(A: Sequence[Sequence], cols: Optional[int] = None) -> DomainMatrix:
    rows = [[to_domain(x) for x in row] for row in A]
    width = len(rows[0]) if rows else (cols or 0)
    return DomainMatrix(rows, (len(rows), width), QQ_I)


def from_domain_matrix(M: DomainMatrix) -> Matrix:
    return [[from_domain(x) for x in row] for row in M.to_list()]


def copy_matrix(A: Sequence[Sequence]) -> Matrix:
    return [[GaussianRational.coerce(x) for x in row] for row in A]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    if A and len(A[0]) != len(B):
        raise ValueError("Cannot multiply incompatible matrices")
    if not A or not B or not B[0]:
        return [[ZERO] * (len(B[0]) if B else 0) for _ in A]
    return from_domain_matrix(to_domain_matrix(A) * to_domain_matrix(B))


def matrices_equal(A: Sequence[Sequence], B: Sequence[Sequence]) -> bool:
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def is_lower_triangular(A: Sequence[Sequence]) -> bool:
    return all(A[i][j] == 0 for i in range(len(A)) for j in range(i + 1, len(A[i])))


def rref(A: Sequence[Sequence], column_order: Optional[Sequence[int]] = None) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form.

    Args:
        A: matrix to reduce (not modified)
        column_order: permutation of the columns giving the order in which
            they are tried as pivot columns, default left to right

    Returns:
        Tuple of (reduced matrix, pivot columns in the order they were used)
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    order = list(range(cols)) if column_order is None else list(column_order)
    if sorted(order) != list(range(cols)):
        raise ValueError(f"column order {order} is not a permutation of {cols} columns")
    if not rows or not cols:
        return copy_matrix(A), []
    permuted = to_domain_matrix([[row[c] for c in order] for row in A])
    reduced, pivots = permuted.rref()
    R = zeros(rows, cols)
    for r, row in enumerate(from_domain_matrix(reduced)):
        for k, c in enumerate(order):
            R[r][c] = row[k]
    return R, [order[p] for p in pivots]


def rank(A: Sequence[Sequence]) -> int:
    if not A or not A[0]:
        return 0
    return to_domain_matrix(A).rank()


def solve(
    A: Sequence[Sequence],
    b: Sequence,
    column_order: Optional[Sequence[int]] = None,
) -> Optional[Vector]:
    """One solution of A x = b with free variables set to zero, or None."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows == 0:
        return [ZERO] * cols
    augmented = [list(row) + [b[i]] for i, row in enumerate(A)]
    order = list(range(cols)) if column_order is None else list(column_order)
    R, pivots = rref(augmented, order + [cols])
    if cols in pivots:
        return None
    x: Vector = [ZERO] * cols
    for r, c in enumerate(pivots):
        x[c] = R[r][cols]
    return x


def inverse(A: Sequence[Sequence]) -> Matrix:
    """Inverse of a square matrix; raises ZeroDivisionError when singular."""
    if not A:
        return []
    try:
        return from_domain_matrix(to_domain_matrix(A).inv())
    except DMNonInvertibleMatrixError:
        raise ZeroDivisionError("Matrix not invertible") from None


def determinant(A: Sequence[Sequence]) -> GaussianRational:
    if not A:
        return ONE
    return from_domain(to_domain_matrix(A).det())


def charpoly(A: Sequence[Sequence]) -> Vector:
    """Characteristic polynomial det(t I - A), coefficients constant term first."""
    if not A:
        return [ONE]
    return [from_domain(c) for c in reversed(to_domain_matrix(A).charpoly())]

