"""Wedderburn rank-one reduction and the full rank-reducing decomposition.

One step subtracts w^-1 * (C x)(y^T C) from C, where w = y^T C x != 0; the
result has rank exactly one less.  Iterating with canonical unit-vector
pivots until the residual vanishes writes C as a sum of rank(C) rank-one
terms.  This classical decomposition serves as the independent oracle for
the closed-form game reductions elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .matrices import ExactMatrix, RankOneFactor, in_column_space, coerce_vector
from .scalars import Scalar


class PivotError(ValueError):
    """Raised when y^T C x vanishes for the proposed step."""


@dataclass(frozen=True, slots=True)
class WedderburnStep:
    x: tuple[Scalar, ...]
    y: tuple[Scalar, ...]
    w: Scalar
    extracted: RankOneFactor  # the subtracted rank-1 term w^-1 (C x)(y^T C)


def wedderburn_step(
    mat: ExactMatrix, x: Sequence, y: Sequence
) -> tuple[ExactMatrix, WedderburnStep]:
    """One rank-reduction step; requires y^T C x != 0."""
    x = coerce_vector(x)
    y = coerce_vector(y)
    col_part = mat.matvec(x)
    row_part = mat.vecmat(y)
    w = sum(yi * ci for yi, ci in zip(y, col_part))
    if w == 0:
        raise PivotError("y^T C x = 0: pivot does not reduce the rank")
    factor = RankOneFactor(tuple(ci / w for ci in col_part), row_part)
    reduced = mat - factor.outer()
    return reduced, WedderburnStep(x=x, y=y, w=w, extracted=factor)


def _unit(size: int, k: int) -> tuple:
    return tuple(1 if idx == k else 0 for idx in range(size))


def rank_reducing_decomposition(mat: ExactMatrix) -> list[WedderburnStep]:
    """Decompose a nonzero matrix as a sum of rank(C) rank-one terms.

    Pivots are canonical: the k-th step uses x = e_j, y = e_i for the first
    nonzero entry (i, j) of the running residual in row-major order, which
    always gives w = C[i][j] != 0.
    """
    if mat.is_zero():
        raise ValueError("cannot decompose the zero matrix")
    steps: list[WedderburnStep] = []
    residual = mat
    while True:
        pos = residual.first_nonzero()
        if pos is None:
            return steps
        i, j = pos
        residual, step = wedderburn_step(residual, _unit(mat.n, j), _unit(mat.m, i))
        steps.append(step)


def rowspace_propagation_check(
    mat: ExactMatrix, x1: Sequence, y1: Sequence, z: Sequence
) -> bool:
    """Cross-check how one step shrinks the row space.

    After C2 = C - w^-1 (C x1)(y1^T C), a vector z lies in the row space of
    C2 exactly when it lies in the row space of C and is orthogonal to x1.
    Returns True when both sides of that equivalence agree for this z; a
    correct step makes this hold for every z.
    """
    reduced, _ = wedderburn_step(mat, x1, y1)
    z = coerce_vector(z)
    lhs = in_column_space(reduced.transpose(), z)
    rhs = in_column_space(mat.transpose(), z) and sum(
        zi * xi for zi, xi in zip(z, x1)
    ) == 0
    return lhs == rhs
