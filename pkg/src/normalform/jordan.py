"""Exact lower Jordan form over the Gaussian rationals."""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import sympy
from sympy import QQ_I

from ..exactnum.gaussian import gaussian_roots
from ..exactnum.numbers import GaussianRational
from ..spectrum.ordering import OrderedSpectrum
from ..utils.errors import InternalInvariantViolation, IrrationalSpectrum, SingularLinearPart
from ..utils.linalg import (
    Matrix,
    charpoly,
    copy_matrix,
    from_domain,
    inverse,
    is_lower_triangular,
    matmul,
    rank,
    to_domain_matrix,
    transpose,
)

logger = logging.getLogger(__name__)

EigenvalueKey = Callable[[GaussianRational], tuple]


def nice_key(z: GaussianRational) -> tuple:
    return (-z.modulus_squared(), z.re, z.im)


def eigenvalues(M: Sequence[Sequence]) -> List[Tuple[GaussianRational, int]]:
    """Eigenvalues with algebraic multiplicity; IrrationalSpectrum if some root is not in Q(i)."""
    roots, leftover = gaussian_roots(charpoly(M))
    if len(leftover) > 1:
        raise IrrationalSpectrum(
            f"characteristic polynomial has a factor of degree {len(leftover) - 1} without Gaussian-rational roots"
        )
    return roots


def _blocks(M: Matrix) -> List[Tuple[GaussianRational, List[list]]]:
    """(mu, chain) per block of sympy's upper Jordan form, chain as [t, N t, N^2 t, ...].

    sympy's block columns p_1..p_k satisfy N p_1 = 0 and N p_(j+1) = p_j, so
    the chain is the block read backwards.
    """
    P, J = to_domain_matrix(M).to_Matrix().jordan_form()
    d = len(M)
    blocks = []
    start = 0
    while start < d:
        end = start + 1
        while end < d and J[end - 1, end] == 1:
            end += 1
        mu = _gaussian(J[start, start])
        chain = [[_gaussian(P[i, c]) for i in range(d)] for c in range(end - 1, start - 1, -1)]
        blocks.append((mu, chain))
        start = end
    return blocks


def _gaussian(entry) -> GaussianRational:
    return from_domain(QQ_I.from_sympy(sympy.expand_complex(entry)))


def jordan_basis(M: Sequence[Sequence], key: Optional[EigenvalueKey] = None) -> Tuple[Matrix, List[int]]:
    """Transition matrix S with S^{-1} M S lower Jordan, and the block sizes.

    Eigenvalues are grouped in `key` order (nicely ordered by default); blocks
    of one eigenvalue come by decreasing size.
    """
    M = copy_matrix(M)
    if not M:
        return [], []
    # IrrationalSpectrum is raised here, before sympy looks for the roots.
    eigenvalues(M)
    blocks = sorted(_blocks(M), key=lambda block: ((key or nice_key)(block[0]), -len(block[1])))
    columns: List[list] = [vector for _, chain in blocks for vector in chain]
    return transpose(columns), [len(chain) for _, chain in blocks]


def is_lower_jordan(J: Sequence[Sequence]) -> bool:
    """Lower bidiagonal, sub-diagonal in {0, 1}, ones only between equal eigenvalues."""
    d = len(J)
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            if i == j + 1:
                if J[i][j] not in (0, 1) or (J[i][j] == 1 and J[i][i] != J[j][j]):
                    return False
            elif J[i][j] != 0:
                return False
    return True


def jordan_lower(M: Sequence[Sequence]) -> Tuple[Matrix, Matrix]:
    """(J, S) with S^{-1} M S == J lower Jordan and diagonal nicely ordered.

    Ties in modulus are broken by (re, im); a lower triangular M keeps its own
    diagonal order among equal moduli so already-normal input is left alone.
    """
    M = copy_matrix(M)
    d = len(M)
    if d and any(len(row) != d for row in M):
        raise ValueError("linear part must be square")
    if rank(M) < d:
        raise SingularLinearPart("linear part is singular")

    key = nice_key
    if is_lower_triangular(M):
        diagonal = [M[i][i] for i in range(d)]
        key = lambda z: (-z.modulus_squared(), diagonal.index(z))

    S, sizes = jordan_basis(M, key)
    J = matmul(matmul(inverse(S), M), S)
    if not is_lower_jordan(J):
        raise InternalInvariantViolation("Jordan transition did not produce a lower Jordan matrix")
    logger.debug("Jordan blocks %s", sizes)
    return J, S


def spectrum_of_jordan(J: Sequence[Sequence]) -> OrderedSpectrum:
    d = len(J)
    return OrderedSpectrum(
        tuple(J[i][i] for i in range(d)),
        tuple(J[i + 1][i] == 1 for i in range(d - 1)),
    )
