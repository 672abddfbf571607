"""Rank-1 values of a linear matrix pencil A + lambda*B, solved exactly.

Instead of generalized-eigenvalue machinery, the solver uses the fact that
A + lambda*B has rank one exactly when every 2x2 minor vanishes.  Anchored
at a pivot (i, j) with a[i][j] != 0, each cell (s, t) off the pivot row and
column yields the cleared minor polynomial

    g(lam) = (a_st + lam b_st)(a_ij + lam b_ij)
             - (a_sj + lam b_sj)(a_it + lam b_it),

a quadratic at most.  Any rank-1 lambda is a common root of every nonzero
cell polynomial, so it suffices to solve ONE nonzero cell and verify its
roots by an exact entrywise rank-1 comparison.  The resulting set has at
most two members.  Degenerate pencils (a zero side, or proportional sides)
carry flags instead: `all_lambda` when all but finitely many lambda work,
and `vanishes_at` for the lambda where the whole pencil is the zero matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import ExactMatrix
from .scalars import QuadExt, Scalar, solve_quadratic


class ContractViolationError(RuntimeError):
    """Every cell polynomial vanished although the pencil had rank > 1."""


@dataclass(frozen=True, slots=True)
class PencilQuadratic:
    """Cleared minor polynomial of cell (s, t) against pivot (i, j)."""

    s: int
    t: int
    i: int
    j: int
    c2: Fraction
    c1: Fraction
    c0: Fraction

    @property
    def is_zero(self) -> bool:
        return self.c2 == 0 and self.c1 == 0 and self.c0 == 0

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c2, self.c1, self.c0)


@dataclass(frozen=True, slots=True)
class LambdaSet:
    """Verified rank-1 pencil values plus degeneracy flags.

    values        verified finite lambdas (at most two)
    special_case  the -a_ij/b_ij branch value, if it verified (also in values)
    all_lambda    rank one at every lambda outside `excluded`
    excluded      the finitely many exceptions to all_lambda
    vanishes_at   lambda where A + lambda*B is the zero matrix, if any
    quadratic     the cell polynomial that was solved, if the solver got there
    candidates    roots of `quadratic` before verification
    """

    values: tuple[Scalar, ...]
    special_case: Scalar | None = None
    all_lambda: bool = False
    excluded: tuple[Scalar, ...] = ()
    vanishes_at: Scalar | None = None
    quadratic: PencilQuadratic | None = None
    candidates: tuple[Scalar, ...] = ()


def select_pivot(mat: ExactMatrix) -> tuple[int, int]:
    """First (i, j) in row-major order with a nonzero entry."""
    pos = mat.first_nonzero()
    if pos is None:
        raise ValueError("cannot pick a pivot in the zero matrix")
    return pos


def cell_quadratic(
    a: ExactMatrix, b: ExactMatrix, i: int, j: int, s: int, t: int
) -> PencilQuadratic:
    """Cleared minor polynomial for cell (s, t); requires s != i and t != j."""
    if s == i or t == j:
        raise ValueError("cells on the pivot row or column are identically zero")
    a_ij, b_ij = a[i, j], b[i, j]
    a_st, b_st = a[s, t], b[s, t]
    a_sj, b_sj = a[s, j], b[s, j]
    a_it, b_it = a[i, t], b[i, t]
    return PencilQuadratic(
        s=s,
        t=t,
        i=i,
        j=j,
        c2=b_st * b_ij - b_sj * b_it,
        c1=a_st * b_ij + b_st * a_ij - a_sj * b_it - b_sj * a_it,
        c0=a_st * a_ij - a_sj * a_it,
    )


def find_nonzero_quadratic(
    a: ExactMatrix, b: ExactMatrix, i: int, j: int
) -> PencilQuadratic:
    """First cell (row-major, skipping row i and column j) with a nonzero polynomial."""
    for s in range(a.m):
        if s == i:
            continue
        for t in range(a.n):
            if t == j:
                continue
            quad = cell_quadratic(a, b, i, j, s, t)
            if not quad.is_zero:
                return quad
    raise ContractViolationError(
        "all cell polynomials vanished; the pencil cannot have had rank > 1"
    )


def pencil_at(a: ExactMatrix, b: ExactMatrix, lam) -> ExactMatrix:
    return a + b.scale(lam)


def _rank_one_at(a: ExactMatrix, b: ExactMatrix, i: int, j: int, lam) -> bool:
    """Exact entrywise test that A + lam*B equals its pivot-anchored
    rank-1 reconstruction (column j times row i over the pivot entry)."""
    p = pencil_at(a, b, lam)
    denom = p[i, j]
    if denom == 0:
        # the anchored reconstruction is undefined here; test rank directly
        return p.is_rank_one() is not None
    left = p.col(j)
    row = p.row(i)
    for s in range(p.m):
        ls = left[s]
        for t in range(p.n):
            if p[s, t] * denom != ls * row[t]:
                return False
    return True


def _proportionality_ratio(a: ExactMatrix, b: ExactMatrix) -> Fraction | None:
    """c with B == c*A when the two nonzero matrices are proportional."""
    pos = a.first_nonzero()
    ratio = b[pos] / a[pos]
    for i in range(a.m):
        for j in range(a.n):
            if b[i, j] != ratio * a[i, j]:
                return None
    return ratio


def _ordered(values) -> tuple[Scalar, ...]:
    # rationals ascending, then irrationals ascending; the irrationals of a
    # single solve share one extension, so their comparison is always defined
    uniq = list(dict.fromkeys(values))
    rationals = sorted(v for v in uniq if isinstance(v, Fraction))
    irrationals = sorted(v for v in uniq if isinstance(v, QuadExt))
    return tuple(rationals + irrationals)


def solve_rank1_pencil(
    a: ExactMatrix, b: ExactMatrix, cell: tuple[int, int] | None = None
) -> LambdaSet:
    """All lambda with rank(A + lambda*B) = 1, exactly.

    At least one of A, B must be nonzero.  `cell` optionally forces which
    cell polynomial is solved (it must not be the zero polynomial); by
    default the first nonzero cell in row-major order is used.
    """
    a_zero = a.is_zero()
    b_zero = b.is_zero()
    if a_zero and b_zero:
        raise ValueError("zero pencil: A and B are both zero")

    if (a + b).is_rank_one() is not None:
        return LambdaSet(values=(Fraction(1),))

    if a_zero:
        # pencil is lam*B: rank(B) at every lam != 0, zero matrix at lam = 0
        good = b.is_rank_one() is not None
        return LambdaSet(
            values=(),
            all_lambda=good,
            excluded=(Fraction(0),) if good else (),
            vanishes_at=Fraction(0),
        )
    if b_zero:
        # constant pencil
        good = a.is_rank_one() is not None
        return LambdaSet(values=(), all_lambda=good)

    ratio = _proportionality_ratio(a, b)
    if ratio is not None:
        # pencil is (1 + lam*c) * A: zero matrix at lam = -1/c, constant
        # rank elsewhere.  rank(A) = 1 with c != -1 was already caught by
        # the rank(A+B) = 1 branch, so all_lambda here implies c = -1.
        vanish = -1 / ratio
        good = a.is_rank_one() is not None
        return LambdaSet(
            values=(),
            all_lambda=good,
            excluded=(vanish,) if good else (),
            vanishes_at=vanish,
        )

    # general pencil: rank(A+B) >= 2 here, so a nonzero cell polynomial exists
    i, j = select_pivot(a)
    found: list[Scalar] = []
    special = None
    if b[i, j] != 0:
        lam0 = -a[i, j] / b[i, j]
        if pencil_at(a, b, lam0).is_rank_one() is not None:
            special = lam0
            found.append(lam0)
    if cell is not None:
        quad = cell_quadratic(a, b, i, j, cell[0], cell[1])
        if quad.is_zero:
            raise ValueError(f"cell {cell} has the zero polynomial")
    else:
        quad = find_nonzero_quadratic(a, b, i, j)
    roots = solve_quadratic(quad.c2, quad.c1, quad.c0)
    for lam in roots:
        if _rank_one_at(a, b, i, j, lam):
            found.append(lam)
    return LambdaSet(
        values=_ordered(found),
        special_case=special,
        quadratic=quad,
        candidates=tuple(roots),
    )
