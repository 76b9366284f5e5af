"""Integer lattices on sympy's integer normal forms.

Kernels come from the Smith decomposition and bases are put in row Hermite
form, both over ZZ.
"""

from typing import List, Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

IntMatrix = List[List[int]]


def _domain_matrix(rows: Sequence[Sequence[int]], cols: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (len(rows), cols), ZZ)


def integer_kernel(A: Sequence[Sequence[int]], cols: int) -> IntMatrix:
    """Basis of {v in Z^cols : A v = 0}.

    With D = S A T in Smith form and S, T unimodular, the kernel is spanned
    by the columns of T facing a zero diagonal entry of D.
    """
    if not A:
        return [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    D, _, T = smith_normal_decomp(_domain_matrix(A, cols))
    diagonal, transform = D.to_list(), T.to_list()
    free = [j for j in range(cols) if j >= len(A) or diagonal[j][j] == 0]
    return [[int(transform[i][j]) for i in range(cols)] for j in free]


def hermite_rows(basis: Sequence[Sequence[int]]) -> IntMatrix:
    """Row Hermite normal form of the lattice spanned by `basis` (zero rows dropped).

    Each row starts with a positive pivot, pivots move strictly right, and
    the entries above a pivot lie in [0, pivot).
    """
    if not basis:
        return []
    cols = len(basis[0])
    # sympy's form is by columns with pivots at the bottom; reversing the
    # coordinates turns it into this one.
    columns = _domain_matrix([list(reversed(v)) for v in basis], cols).transpose()
    W = hermite_normal_form(columns).to_list()
    rank = len(W[0]) if W else 0
    vectors = [[int(W[i][c]) for i in range(cols)] for c in range(rank)]
    return [list(reversed(v)) for v in reversed(vectors)]
