"""Decide whether a rational bimatrix game is a disguised rank-1 game.

A game (A, B) is strategically equivalent to a rank-1 game through a
positive affine transformation exactly when, for some gamma > 0, the blend
A + gamma*B splits into an additively separable "don't care" part plus a
rank-1 part.  The separable part can soak up at most a row-constant and a
column-constant term, so four reductions cover every shape it can take:

    none    solve the raw pencil (A, B)
    row     first subtract the pivot row from every row
    col     first subtract the pivot column from every column
    both    subtract both, anchored at a pivot cell (l, k)

Each reduction maps the separable part to zero while keeping the pencil
linear in gamma, so the question becomes "is there a positive gamma making
the reduced pencil rank one" -- which the pencil solver answers exactly.
The cases run in the order above; the first one that produces a verified
positive gamma wins and the equivalent game is assembled from it, together
with a certificate that can be re-checked from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .games import BimatrixGame
from .matrices import ExactMatrix
from .pencil import LambdaSet, solve_rank1_pencil
from .scalars import Scalar, is_rational, sign_of

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not-equivalent"
DEGENERATE_ZERO_SUM = "degenerate-zero-sum"
REJECTED = "rejected"

CASE_NONE = "none"
CASE_ROW = "row"
CASE_COL = "col"
CASE_BOTH = "both"

REDUCTION_CASES = (CASE_NONE, CASE_ROW, CASE_COL, CASE_BOTH)


@dataclass(frozen=True, slots=True)
class ReductionCertificate:
    """Everything needed to re-check an equivalence claim independently.

    The claimed rank-1 game is (A_hat, B_hat) with A_hat + B_hat equal to
    the outer product r_hat c_hat^T; u_hat and v_hat are the subtracted
    row-constant and column-constant parts, so that

        A - A_hat           == ones_m * u_hat^T
        gamma * B - B_hat   == v_hat * ones_n^T
    """

    gamma: Scalar
    case: str
    pivot: tuple[int, int] | None
    u_hat: tuple[Scalar, ...]
    v_hat: tuple[Scalar, ...]
    r_hat: tuple[Scalar, ...]
    c_hat: tuple[Scalar, ...]
    A_hat: ExactMatrix
    B_hat: ExactMatrix

    def reduced_game(self) -> BimatrixGame:
        return BimatrixGame(self.A_hat, self.B_hat)


@dataclass(frozen=True, slots=True)
class ReductionResult:
    """Outcome of :func:`reduce_game`; exactly one status applies.

    `lambda_set` carries the pencil solution of the case that settled the
    outcome (when one was solved), which is useful for audits and tests.
    """

    status: str
    certificate: ReductionCertificate | None = None
    reason: str | None = None
    lambda_set: LambdaSet | None = None

    @property
    def equivalent(self) -> bool:
        return self.status == EQUIVALENT


def _ones(size: int) -> tuple[Fraction, ...]:
    return (Fraction(1),) * size


def _subtract_row(mat: ExactMatrix, i: int) -> ExactMatrix:
    return mat.add_outer(_ones(mat.m), mat.row(i), -1)


def _subtract_col(mat: ExactMatrix, j: int) -> ExactMatrix:
    return mat.add_outer(mat.col(j), _ones(mat.n), -1)


def build_reduced_pair(
    game: BimatrixGame, l: int, k: int
) -> tuple[ExactMatrix, ExactMatrix]:
    """Subtract row l and column k (re-adding the (l, k) anchor) from both
    payoff matrices; rows l and columns k of the results are identically
    zero, and any additively separable part is mapped to the zero matrix."""
    if not (0 <= l < game.m and 0 <= k < game.n):
        raise IndexError(f"pivot ({l}, {k}) outside a {game.m}x{game.n} game")
    abar = _subtract_col(_subtract_row(game.A, l), k)
    bbar = _subtract_col(_subtract_row(game.B, l), k)
    return abar, bbar


def _case_pair(
    game: BimatrixGame, case: str, pivot: tuple[int, int]
) -> tuple[ExactMatrix, ExactMatrix]:
    if case == CASE_NONE:
        return game.A, game.B
    if case == CASE_ROW:
        return _subtract_row(game.A, 0), _subtract_row(game.B, 0)
    if case == CASE_COL:
        return _subtract_col(game.A, 0), _subtract_col(game.B, 0)
    return build_reduced_pair(game, *pivot)


def _choose_gamma(lam: LambdaSet) -> Scalar | None:
    """Deterministic positive pick: rational before irrational, then smallest."""
    if lam.all_lambda:
        for k in (1, 2):
            g = Fraction(k)
            if g not in lam.excluded:
                return g
    positives = [v for v in lam.values if sign_of(v) > 0]
    if not positives:
        return None
    rationals = [v for v in positives if isinstance(v, Fraction)]
    if rationals:
        return min(rationals)
    return min(positives)


def _assemble(
    game: BimatrixGame, case: str, pivot: tuple[int, int], gamma: Scalar
) -> ReductionCertificate:
    a, b = game.A, game.B
    zero_u = (Fraction(0),) * game.n
    zero_v = (Fraction(0),) * game.m
    u_hat, v_hat = zero_u, zero_v
    if case in (CASE_ROW, CASE_BOTH):
        row = 0 if case == CASE_ROW else pivot[0]
        u_hat = tuple(x + gamma * y for x, y in zip(a.row(row), b.row(row)))
    if case == CASE_COL:
        v_hat = tuple(x + gamma * y for x, y in zip(a.col(0), b.col(0)))
    if case == CASE_BOTH:
        l, k = pivot
        v_hat = tuple(
            (x - a[l, k]) + gamma * (y - b[l, k])
            for x, y in zip(a.col(k), b.col(k))
        )
    a_hat = a if case in (CASE_NONE, CASE_COL) else a.add_outer(_ones(game.m), u_hat, -1)
    b_hat = b.scale(gamma)
    if case in (CASE_COL, CASE_BOTH):
        b_hat = b_hat.add_outer(v_hat, _ones(game.n), -1)
    factor = (a_hat + b_hat).is_rank_one()
    if factor is None:  # the pencil verified rank one at gamma; cannot happen
        raise AssertionError("assembled game lost its rank-1 structure")
    return ReductionCertificate(
        gamma=gamma,
        case=case,
        pivot=pivot if case == CASE_BOTH else None,
        u_hat=u_hat,
        v_hat=v_hat,
        r_hat=factor.left,
        c_hat=factor.right,
        A_hat=a_hat,
        B_hat=b_hat,
    )


def reduce_game(game: BimatrixGame, pivot: tuple[int, int] = (0, 0)) -> ReductionResult:
    """Run the four-case reduction and return the decision with evidence.

    `pivot` selects the anchor cell of the final (row-and-column) case.
    Games smaller than 2x2, or with irrational payoffs, are rejected.
    """
    if game.m < 2 or game.n < 2:
        return ReductionResult(REJECTED, reason="both players need at least two actions")
    if not all(
        is_rational(e) for mat in (game.A, game.B) for row in mat.entries for e in row
    ):
        return ReductionResult(REJECTED, reason="payoff entries must be rational")
    l, k = pivot
    if not (0 <= l < game.m and 0 <= k < game.n):
        return ReductionResult(REJECTED, reason="pivot outside the payoff matrix")

    saw_lambda = False
    for case in REDUCTION_CASES:
        abar, bbar = _case_pair(game, case, (l, k))
        if abar.is_zero() and bbar.is_zero():
            return ReductionResult(
                DEGENERATE_ZERO_SUM,
                reason="A + gamma*B is additively separable for every gamma",
            )
        lam = solve_rank1_pencil(abar, bbar)
        if lam.vanishes_at is not None and sign_of(lam.vanishes_at) > 0:
            return ReductionResult(
                DEGENERATE_ZERO_SUM,
                reason="A + gamma*B is additively separable at a positive gamma",
                lambda_set=lam,
            )
        gamma = _choose_gamma(lam)
        if gamma is not None:
            cert = _assemble(game, case, (l, k), gamma)
            return ReductionResult(EQUIVALENT, certificate=cert, lambda_set=lam)
        if lam.values:
            saw_lambda = True
    return ReductionResult(
        NOT_EQUIVALENT,
        reason="no-positive-lambda" if saw_lambda else "empty-lambda",
    )


def check_certificate(game: BimatrixGame, cert: ReductionCertificate) -> list[str]:
    """Re-derive every certificate invariant; returns the list of failures."""
    problems: list[str] = []
    if cert.A_hat.shape != game.A.shape or cert.B_hat.shape != game.A.shape:
        return ["certificate matrices do not match the game shape"]
    if len(cert.u_hat) != game.n or len(cert.v_hat) != game.m:
        return ["certificate vectors do not match the game shape"]
    if sign_of(cert.gamma) <= 0:
        problems.append("gamma is not positive")
    total = cert.A_hat + cert.B_hat
    if total != ExactMatrix.from_outer(cert.r_hat, cert.c_hat):
        problems.append("A_hat + B_hat differs from r_hat c_hat^T")
    if total.is_rank_one() is None:
        problems.append("A_hat + B_hat is not a rank-1 matrix")
    row_part = ExactMatrix.from_outer(_ones(game.m), cert.u_hat)
    if game.A - cert.A_hat != row_part:
        problems.append("A - A_hat is not the recorded row-constant part")
    col_part = ExactMatrix.from_outer(cert.v_hat, _ones(game.n))
    if game.B.scale(cert.gamma) - cert.B_hat != col_part:
        problems.append("gamma*B - B_hat is not the recorded column-constant part")
    return problems


def verify_certificate(game: BimatrixGame, cert: ReductionCertificate) -> bool:
    return not check_certificate(game, cert)
