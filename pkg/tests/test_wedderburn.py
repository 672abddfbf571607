import random
from fractions import Fraction

import pytest

from rank1eq import (
    ExactMatrix,
    PivotError,
    rank_reducing_decomposition,
    rowspace_propagation_check,
    wedderburn_step,
)

from oracles import random_low_rank_matrix, random_matrix, random_nonzero_matrix

M = ExactMatrix.from_rows


def test_step_on_identity():
    reduced, step = wedderburn_step(ExactMatrix.identity(2), [1, 0], [1, 0])
    assert reduced == M([[0, 0], [0, 1]])
    assert step.w == 1
    assert step.extracted.outer() == M([[1, 0], [0, 0]])
    assert reduced + step.extracted.outer() == ExactMatrix.identity(2)


def test_step_rejects_zero_pivot():
    with pytest.raises(PivotError):
        wedderburn_step(ExactMatrix.identity(2), [0, 1], [1, 0])


def test_step_drops_rank_by_one_on_random_rank3():
    rng = random.Random(31)
    hits = 0
    while hits < 20:
        mat = random_low_rank_matrix(rng, 4, 4, 3)
        if mat.rank() != 3:
            continue
        hits += 1
        x = [rng.randint(-2, 2) for _ in range(4)]
        y = [rng.randint(-2, 2) for _ in range(4)]
        try:
            reduced, _ = wedderburn_step(mat, x, y)
        except PivotError:
            continue
        assert reduced.rank() == 2


def test_decomposition_of_rank_one_matrix():
    mat = M([[2, 4], [3, 6]])
    steps = rank_reducing_decomposition(mat)
    assert len(steps) == 1
    assert steps[0].extracted.outer() == mat


def test_decomposition_of_identity():
    steps = rank_reducing_decomposition(ExactMatrix.identity(3))
    assert len(steps) == 3
    total = ExactMatrix.zeros(3, 3)
    for s in steps:
        total = total + s.extracted.outer()
    assert total == ExactMatrix.identity(3)


def test_decomposition_of_random_rank_two():
    rng = random.Random(37)
    hits = 0
    while hits < 20:
        mat = random_low_rank_matrix(rng, 4, 5, 2)
        if mat.rank() != 2:
            continue
        hits += 1
        steps = rank_reducing_decomposition(mat)
        assert len(steps) == 2
        total = ExactMatrix.zeros(4, 5)
        for s in steps:
            total = total + s.extracted.outer()
        assert total == mat


def test_decomposition_rejects_zero_matrix():
    with pytest.raises(ValueError):
        rank_reducing_decomposition(ExactMatrix.zeros(2, 2))


def test_decomposition_invariants():
    # rank drops by exactly one per step, the step's x lands in the new null
    # space, and extracted left factors leave the span of later residuals
    rng = random.Random(41)
    for _ in range(60):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        mat = random_nonzero_matrix(rng, m, n)
        steps = rank_reducing_decomposition(mat)
        assert len(steps) == mat.rank()
        residual = mat
        residuals_after = []
        for step in steps:
            before = residual.rank()
            residual = residual - step.extracted.outer()
            assert residual.rank() == before - 1
            assert all(e == 0 for e in residual.matvec(step.x))
            residuals_after.append(residual)
        assert residual.is_zero()
        # left factor of step k is outside the column span of every later residual
        from rank1eq.matrices import in_column_space

        for k, step in enumerate(steps):
            for later in residuals_after[k:]:
                if not later.is_zero():
                    assert not in_column_space(later, step.extracted.left)


def test_propagation_check_specific_vectors():
    rng = random.Random(43)
    mat = random_low_rank_matrix(rng, 4, 4, 3)
    x1 = [1, 0, 0, 0]
    y1 = [0, 1, 0, 0]
    reduced, _ = wedderburn_step(mat, x1, y1)
    # a row of the reduced matrix: in its row space by construction
    z = reduced.row(0)
    assert rowspace_propagation_check(mat, x1, y1, z)
    # aligned with x1, not orthogonal to it: both sides of the rule fail
    assert rowspace_propagation_check(mat, x1, y1, x1)


def test_propagation_check_random_instances():
    rng = random.Random(47)
    checked = 0
    while checked < 300:
        m, n = rng.randint(2, 5), rng.randint(2, 5)
        mat = random_nonzero_matrix(rng, m, n)
        x1 = [rng.randint(-2, 2) for _ in range(n)]
        y1 = [rng.randint(-2, 2) for _ in range(m)]
        w = sum(
            yi * ci for yi, ci in zip(y1, mat.matvec(x1))
        )
        if w == 0:
            continue
        kind = rng.random()
        if kind < 0.4:
            z = [rng.randint(-3, 3) for _ in range(n)]
        elif kind < 0.7:
            z = mat.row(rng.randrange(m))
        else:
            reduced, _ = wedderburn_step(mat, x1, y1)
            z = reduced.row(rng.randrange(m))
        assert rowspace_propagation_check(mat, x1, y1, z)
        checked += 1
