import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank1eq import (
    FieldMismatchError,
    QuadExt,
    format_scalar,
    parse_rational,
    parse_scalar,
    quad_ext,
    sign_of,
    solve_quadratic,
    squarefree_split,
)

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=20
)
cores = st.sampled_from([2, 3, 5, 6, 7, 10])


@st.composite
def quad_values(draw, d=None):
    d = d if d is not None else draw(cores)
    return quad_ext(draw(rationals), draw(rationals), d)


def test_conjugate_product_is_rational():
    assert quad_ext(1, 1, 2) * quad_ext(1, -1, 2) == Fraction(-1)


def test_sqrt_squares_to_radicand():
    root = quad_ext(0, 1, 2)
    assert root * root == Fraction(2)


def test_rational_addition_stays_rational():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_mixed_rational_arithmetic():
    x = quad_ext(Fraction(1, 2), Fraction(3, 4), 5)
    assert x + Fraction(1, 2) == quad_ext(1, Fraction(3, 4), 5)
    assert 2 * x == quad_ext(1, Fraction(3, 2), 5)
    assert x - x == 0
    assert Fraction(1) / quad_ext(0, 1, 2) == quad_ext(0, Fraction(1, 2), 2)


def test_field_mismatch_rejected():
    with pytest.raises(FieldMismatchError):
        quad_ext(0, 1, 2) + quad_ext(0, 1, 3)
    with pytest.raises(FieldMismatchError):
        quad_ext(0, 1, 2) * quad_ext(1, 1, 5)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        quad_ext(1, 1, 2) / Fraction(0)


def test_quadext_normalisation():
    assert quad_ext(3, 0, 7) == Fraction(3)
    assert quad_ext(1, 1, 0) == Fraction(1)
    assert quad_ext(1, 2, 9) == Fraction(7)  # sqrt(9) folds into the rational
    assert quad_ext(0, 1, 8) == QuadExt(0, 2, 2)
    with pytest.raises(ValueError):
        QuadExt(1, 0, 2)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 1)


def test_sign_examples():
    assert sign_of(quad_ext(1, 1, 2)) == 1
    # 3^2 = 9 > 8 = (-2)^2 * 2 with a > 0
    assert sign_of(quad_ext(3, -2, 2)) == 1
    # 2^2 = 4 < 18 = (-3)^2 * 2 with b < 0
    assert sign_of(quad_ext(2, -3, 2)) == -1
    assert sign_of(Fraction(0)) == 0
    assert sign_of(Fraction(-5, 3)) == -1


def test_sign_against_interval_evaluation():
    # 1000 random nonzero values, exact sign vs rigorous interval enclosure
    import mpmath

    rng = random.Random(2024)
    iv = mpmath.iv
    iv.dps = 60
    for _ in range(1000):
        a = Fraction(rng.randint(-999, 999), rng.randint(1, 99))
        b = Fraction(rng.randint(-999, 999), rng.randint(1, 99))
        d = rng.choice([2, 3, 5, 6, 7, 11, 13])
        if b == 0:
            continue
        val = quad_ext(a, b, d)
        enclosure = (
            iv.mpf(a.numerator) / a.denominator
            + iv.mpf(b.numerator) / b.denominator * iv.sqrt(d)
        )
        assert 0 not in enclosure, "interval too wide to decide"
        expected = 1 if enclosure > 0 else -1
        assert sign_of(val) == expected


def test_ordering():
    assert quad_ext(0, 1, 2) < Fraction(3, 2)
    assert quad_ext(0, 1, 2) > 1
    assert quad_ext(1, 1, 2) < quad_ext(1, 2, 2)
    assert sorted([quad_ext(0, 1, 2), Fraction(1)]) == [
        Fraction(1),
        quad_ext(0, 1, 2),
    ]


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=10**7))
def test_squarefree_split_property(n):
    s, d = squarefree_split(n)
    assert s * s * d == n
    for p in range(2, 20):
        assert d % (p * p) != 0


def test_squarefree_split_examples():
    assert squarefree_split(18) == (3, 2)
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(4) == (2, 1)
    assert squarefree_split(8) == (2, 2)
    # cofactor bigger than the trial bound, prime
    p = 10_007
    assert squarefree_split(4 * p) == (2, p)
    # perfect square past the trial bound
    assert squarefree_split(p * p) == (p, 1)
    with pytest.raises(ValueError):
        squarefree_split(0)


def test_squarefree_split_large_fallback():
    # forces the full-factorisation path: p^2 * q with p, q > trial bound
    p, q = 10_007, 10_009
    s, d = squarefree_split(p * p * q)
    assert (s, d) == (p, q)


@settings(max_examples=150, deadline=None)
@given(quad_values(d=5), quad_values(d=5), quad_values(d=5))
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    if x != 0:
        assert x / x == 1
    assert x - x == 0


@settings(max_examples=150, deadline=None)
@given(rationals, rationals, rationals)
def test_quadratic_roots_substitute_to_zero(c2, c1, c0):
    if c2 == c1 == c0 == 0:
        with pytest.raises(ValueError):
            solve_quadratic(c2, c1, c0)
        return
    roots = solve_quadratic(c2, c1, c0)
    assert len(roots) <= 2
    for r in roots:
        assert c2 * r * r + c1 * r + c0 == 0


def test_quadratic_examples():
    assert solve_quadratic(1, 2, 0) == [Fraction(0), Fraction(-2)]
    assert solve_quadratic(1, 0, -2) == [quad_ext(0, 1, 2), quad_ext(0, -1, 2)]
    assert solve_quadratic(0, 3, -1) == [Fraction(1, 3)]
    assert solve_quadratic(1, 0, 1) == []  # negative discriminant
    assert solve_quadratic(1, -2, 1) == [Fraction(1)]  # double root, listed once
    assert solve_quadratic(0, 0, 5) == []  # nonzero constant: no roots


@settings(max_examples=150)
@given(st.one_of(rationals, quad_values()))
def test_text_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x
    assert parse_scalar(format_scalar(x, compact=True)) == x


def test_parsing():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational("+7") == 7
    assert parse_scalar("1/2 + -3/4*sqrt(5)") == quad_ext(
        Fraction(1, 2), Fraction(-3, 4), 5
    )
    assert parse_scalar("1+2*sqrt(8)") == quad_ext(1, 2, 8)
    for bad in ("1.5", "3/-4", "1/0", "sqrt(2)", "1 + sqrt(2)", ""):
        with pytest.raises(ValueError):
            parse_scalar(bad)
