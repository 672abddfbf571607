"""Bimatrix games, positive affine transformations, and the fixture generator.

A positive affine transformation (PAT) rescales each player's payoffs by a
positive factor and adds a part the player cannot influence (a row-constant
term for player 1, a column-constant term for player 2); it preserves the
Nash-equilibrium set exactly.  The generator hides a rank-1 game behind a
random PAT, which is the round-trip fixture the reduction is tested against.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .matrices import ExactMatrix, ShapeError, coerce_vector
from .scalars import Scalar


@dataclass(frozen=True, slots=True)
class BimatrixGame:
    """Payoff matrices of the row player (A) and the column player (B)."""

    A: ExactMatrix
    B: ExactMatrix

    def __post_init__(self):
        if self.A.shape != self.B.shape:
            raise ShapeError("payoff matrices must have the same shape")

    @property
    def m(self) -> int:
        return self.A.m

    @property
    def n(self) -> int:
        return self.A.n

    @classmethod
    def from_rows(cls, a_rows, b_rows) -> "BimatrixGame":
        return cls(ExactMatrix.from_rows(a_rows), ExactMatrix.from_rows(b_rows))


@dataclass(frozen=True, slots=True)
class PatParams:
    """Parameters of a PAT: positive scalings, shifts, and shift directions."""

    alpha1: Fraction
    alpha2: Fraction
    beta1: Fraction
    beta2: Fraction
    u: tuple[Scalar, ...]  # length n
    v: tuple[Scalar, ...]  # length m


@dataclass(frozen=True, slots=True)
class Rank1GameSpec:
    """A rank-1 game (A, -A + r c^T) recorded by its generating pieces."""

    A: ExactMatrix
    r: tuple[Scalar, ...]
    c: tuple[Scalar, ...]

    def base_game(self) -> BimatrixGame:
        return BimatrixGame(self.A, (-self.A).add_outer(self.r, self.c))


def game_rank(game: BimatrixGame) -> int:
    """Rank of the payoff sum A + B."""
    return (game.A + game.B).rank()


def apply_pat(game: BimatrixGame, pat: PatParams) -> BimatrixGame:
    """(A, B) -> (a1*A + b1*ones*u^T, a2*B + b2*v*ones^T); a1, a2 > 0."""
    if pat.alpha1 <= 0 or pat.alpha2 <= 0:
        raise ValueError("PAT scalings must be positive")
    if len(pat.u) != game.n or len(pat.v) != game.m:
        raise ShapeError("PAT shift vectors do not match the game shape")
    ones_m = (Fraction(1),) * game.m
    ones_n = (Fraction(1),) * game.n
    u_scaled = tuple(pat.beta1 * x for x in pat.u)
    v_scaled = tuple(pat.beta2 * x for x in pat.v)
    a_new = game.A.scale(pat.alpha1).add_outer(ones_m, u_scaled)
    b_new = game.B.scale(pat.alpha2).add_outer(v_scaled, ones_n)
    return BimatrixGame(a_new, b_new)


def invert_pat(pat: PatParams) -> PatParams:
    """The PAT undoing `pat` exactly: apply_pat(apply_pat(G, p), invert_pat(p)) == G."""
    return PatParams(
        alpha1=1 / Fraction(pat.alpha1),
        alpha2=1 / Fraction(pat.alpha2),
        beta1=-Fraction(pat.beta1) / Fraction(pat.alpha1),
        beta2=-Fraction(pat.beta2) / Fraction(pat.alpha2),
        u=pat.u,
        v=pat.v,
    )


def _draw_vector(rng: random.Random, size: int, bound: int) -> list[int]:
    return [rng.randint(-bound, bound) for _ in range(size)]


def _draw_nonconstant(rng: random.Random, size: int, bound: int) -> list[int]:
    # a constant vector makes r*c^T row- or column-constant, which collapses
    # the hidden rank-1 part into the don't-care subspace; redraw until the
    # outer product is a genuine rank-1 obstruction
    while True:
        vec = _draw_vector(rng, size, bound)
        if any(x != vec[0] for x in vec):
            return vec


def generate_disguised_game(
    m: int, n: int, seed: int, entry_bound: int
) -> tuple[BimatrixGame, Rank1GameSpec, PatParams]:
    """Deterministically draw a rank-1 game and hide it behind a random PAT.

    Returns (disguised game, hidden rank-1 spec, hidden PAT).  All integer
    draws are in [-entry_bound, entry_bound]; the scalings are drawn from
    {1, ..., entry_bound}, so the hidden pencil value is alpha1/alpha2.
    """
    if m < 2 or n < 2:
        raise ValueError("need at least two actions per player")
    if entry_bound < 1:
        raise ValueError("entry_bound must be >= 1")
    rng = random.Random(f"{seed}:{m}:{n}:{entry_bound}")
    a_rows = [_draw_vector(rng, n, entry_bound) for _ in range(m)]
    r = _draw_nonconstant(rng, m, entry_bound)
    c = _draw_nonconstant(rng, n, entry_bound)
    u = _draw_vector(rng, n, entry_bound)
    v = _draw_vector(rng, m, entry_bound)
    pat = PatParams(
        alpha1=Fraction(rng.randint(1, entry_bound)),
        alpha2=Fraction(rng.randint(1, entry_bound)),
        beta1=Fraction(rng.randint(-entry_bound, entry_bound)),
        beta2=Fraction(rng.randint(-entry_bound, entry_bound)),
        u=coerce_vector(u),
        v=coerce_vector(v),
    )
    spec = Rank1GameSpec(
        A=ExactMatrix.from_rows(a_rows),
        r=coerce_vector(r),
        c=coerce_vector(c),
    )
    return apply_pat(spec.base_game(), pat), spec, pat
