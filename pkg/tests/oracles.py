"""Independent brute-force oracles used to check the library's fast paths.

Everything here is deliberately naive: determinants by Laplace expansion,
rank by scanning all square minors, pencil solutions by solving every cell
polynomial.  None of it shares code with the implementations under test.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from rank1eq import BimatrixGame, ExactMatrix


def det_expansion(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by first-row Laplace expansion."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, lead in enumerate(rows[0]):
        if lead == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = lead * det_expansion(minor)
        total += term if j % 2 == 0 else -term
    return total


def minor_rank(mat: ExactMatrix) -> int:
    """Largest k such that some k x k minor is nonzero."""
    best = 0
    for k in range(1, min(mat.m, mat.n) + 1):
        hit = False
        for rows in itertools.combinations(range(mat.m), k):
            for cols in itertools.combinations(range(mat.n), k):
                sub = [[mat[i, j] for j in cols] for i in rows]
                if det_expansion(sub) != 0:
                    hit = True
                    break
            if hit:
                break
        if hit:
            best = k
        else:
            break
    return best


def all_two_by_two_minors_vanish(mat: ExactMatrix) -> bool:
    for i1, i2 in itertools.combinations(range(mat.m), 2):
        for j1, j2 in itertools.combinations(range(mat.n), 2):
            if mat[i1, j1] * mat[i2, j2] - mat[i1, j2] * mat[i2, j1] != 0:
                return False
    return True


def random_matrix(rng: random.Random, m: int, n: int, bound: int = 3) -> ExactMatrix:
    return ExactMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)]
    )


def random_nonzero_matrix(rng: random.Random, m: int, n: int, bound: int = 3) -> ExactMatrix:
    while True:
        mat = random_matrix(rng, m, n, bound)
        if not mat.is_zero():
            return mat


def random_low_rank_matrix(
    rng: random.Random, m: int, n: int, rank: int, bound: int = 3
) -> ExactMatrix:
    """Sum of `rank` random outer products (so rank is at most `rank`)."""
    mat = ExactMatrix.zeros(m, n)
    for _ in range(rank):
        left = [rng.randint(-bound, bound) for _ in range(m)]
        right = [rng.randint(-bound, bound) for _ in range(n)]
        mat = mat.add_outer(left, right)
    return mat


def random_game(rng: random.Random, m: int, n: int, bound: int = 3) -> BimatrixGame:
    return BimatrixGame(random_matrix(rng, m, n, bound), random_matrix(rng, m, n, bound))
