"""Desk-scale exact Nash-equilibrium oracle via support enumeration.

For every pair of equal-size supports the indifference conditions plus the
probability-one constraint form a square linear system; solving it exactly
and filtering by nonnegativity and absence of profitable pure deviations
yields every equilibrium of a nondegenerate game.  Supports whose system is
singular but consistent are recorded as degenerate and skipped -- this
oracle only needs representatives, not equilibrium components.

Pure deviations suffice: expected payoff is linear in one's own mixture, so
the best response against a fixed opponent is attained at a vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .games import BimatrixGame
from .matrices import ExactMatrix, ShapeError, solve_linear
from .scalars import Scalar, sign_of

DEFAULT_SIZE_BOUND = 4


class SizeLimitError(ValueError):
    """Game too large for exhaustive support enumeration."""


@dataclass(frozen=True, slots=True)
class MixedProfile:
    """A mixed-strategy pair: p over rows, q over columns."""

    p: tuple[Scalar, ...]
    q: tuple[Scalar, ...]


@dataclass(frozen=True, slots=True)
class EnumerationResult:
    profiles: tuple[MixedProfile, ...]
    degenerate_supports: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def degenerate(self) -> bool:
        return bool(self.degenerate_supports)


def _payoffs_to(mat: ExactMatrix, q) -> tuple[Scalar, ...]:
    return mat.matvec(q)  # row player's payoff per pure row


def _payoffs_from(mat: ExactMatrix, p) -> tuple[Scalar, ...]:
    return mat.vecmat(p)  # column player's payoff per pure column


def is_nash(game: BimatrixGame, profile: MixedProfile) -> bool:
    """Exact equilibrium test against all pure deviations."""
    if len(profile.p) != game.m or len(profile.q) != game.n:
        raise ShapeError("profile does not match the game shape")
    row_payoffs = _payoffs_to(game.A, profile.q)
    own_row = sum(pi * ri for pi, ri in zip(profile.p, row_payoffs))
    if any(sign_of(r - own_row) > 0 for r in row_payoffs):
        return False
    col_payoffs = _payoffs_from(game.B, profile.p)
    own_col = sum(qj * cj for qj, cj in zip(profile.q, col_payoffs))
    return not any(sign_of(c - own_col) > 0 for c in col_payoffs)


def _indifference_solve(
    payoff: ExactMatrix,
    own_support: tuple[int, ...],
    other_support: tuple[int, ...],
    own_is_row: bool,
):
    """Weights on own_support making the opponent indifferent across
    other_support, summing to one.  The extra unknown is the opponent's
    common payoff.  Returns (status, weights)."""
    k = len(own_support)
    rows = []
    rhs = []
    for t in other_support:
        if own_is_row:
            coeffs = [payoff[s, t] for s in own_support]
        else:
            coeffs = [payoff[t, s] for s in own_support]
        rows.append(coeffs + [Fraction(-1)])
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * k + [Fraction(0)])
    rhs.append(Fraction(1))
    status, sol = solve_linear(ExactMatrix.from_rows(rows), rhs)
    if status != "unique":
        return status, None
    return status, sol[:k]


def _scatter(weights, support: tuple[int, ...], size: int) -> tuple[Scalar, ...]:
    full = [Fraction(0)] * size
    for idx, w in zip(support, weights):
        full[idx] = w
    return tuple(full)


def support_enumeration(
    game: BimatrixGame, size_bound: int = DEFAULT_SIZE_BOUND
) -> EnumerationResult:
    """All equilibria reachable through equal-size support pairs.

    Every returned profile passes :func:`is_nash`.  Singular-but-consistent
    support systems are reported in `degenerate_supports` instead of being
    chased; inconsistent ones are skipped silently.
    """
    if game.m > size_bound or game.n > size_bound:
        raise SizeLimitError(
            f"support enumeration is capped at {size_bound}x{size_bound} games"
        )
    found: dict[MixedProfile, None] = {}
    degenerate: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for k in range(1, min(game.m, game.n) + 1):
        for rows in itertools.combinations(range(game.m), k):
            for cols in itertools.combinations(range(game.n), k):
                # p makes the column player indifferent over `cols`,
                # q makes the row player indifferent over `rows`
                p_status, p_w = _indifference_solve(game.B, rows, cols, own_is_row=True)
                q_status, q_w = _indifference_solve(game.A, cols, rows, own_is_row=False)
                if "many" in (p_status, q_status):
                    degenerate.append((rows, cols))
                    continue
                if p_status != "unique" or q_status != "unique":
                    continue
                if any(sign_of(w) < 0 for w in p_w + q_w):
                    continue
                profile = MixedProfile(
                    p=_scatter(p_w, rows, game.m), q=_scatter(q_w, cols, game.n)
                )
                if is_nash(game, profile):
                    found[profile] = None
    return EnumerationResult(
        profiles=tuple(found), degenerate_supports=tuple(degenerate)
    )


def cross_verify_equivalence(
    game1: BimatrixGame, game2: BimatrixGame, size_bound: int = DEFAULT_SIZE_BOUND
) -> bool:
    """Membership cross-check of the two equilibrium sets.

    Every equilibrium found in either game must be an equilibrium of the
    other.  Checking membership rather than set equality stays correct when
    a game has infinitely many equilibria: each enumerated representative
    is tested in the other game directly.
    """
    if game1.A.shape != game2.A.shape:
        raise ShapeError("games must share a strategy space")
    for prof in support_enumeration(game1, size_bound).profiles:
        if not is_nash(game2, prof):
            return False
    for prof in support_enumeration(game2, size_bound).profiles:
        if not is_nash(game1, prof):
            return False
    return True
