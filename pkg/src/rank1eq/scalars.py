"""Exact scalars: rationals and real quadratic irrationalities a + b*sqrt(d).

Rational values are plain ``fractions.Fraction``; :class:`QuadExt` holds only
genuinely irrational values (b != 0, d squarefree >= 2), so a value has exactly
one representation and equality is structural.  Results of arithmetic that
land back in Q are demoted to ``Fraction`` automatically.

No floating point is used anywhere: signs and comparisons are decided by
comparing a^2 against b^2*d with exact integer arithmetic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class FieldMismatchError(ArithmeticError):
    """Raised when combining elements of Q(sqrt(d1)) and Q(sqrt(d2)), d1 != d2."""


_TRIAL_LIMIT = 10_000


def _factor_large(n: int) -> dict[int, int]:
    # Rarely hit: only for cofactors > _TRIAL_LIMIT**2 that are not squares.
    from sympy import factorint

    return factorint(n)


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n > 0 as s*s*d with d squarefree; returns (s, d).

    Trial division up to a fixed bound, then a perfect-square test on the
    cofactor, then full factorisation of whatever survives.
    """
    if n <= 0:
        raise ValueError("squarefree_split expects a positive integer")
    s = 1
    d = 1
    p = 2
    while p <= _TRIAL_LIMIT and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    if n > 1:
        r = math.isqrt(n)
        if r * r == n:
            s *= r
        elif n <= _TRIAL_LIMIT * _TRIAL_LIMIT:
            # all remaining prime factors exceed the trial bound, so a
            # cofactor below bound^2 must itself be prime
            d *= n
        else:
            for q, e in _factor_large(n).items():
                s *= q ** (e // 2)
                if e % 2:
                    d *= q
    return s, d


def _as_fraction(x) -> Fraction | None:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return None


@dataclass(frozen=True, slots=True)
class QuadExt:
    """An irrational a + b*sqrt(d) with a, b rational, d squarefree >= 2.

    Instances are immutable and hashable.  Mixed arithmetic with ``int`` and
    ``Fraction`` works in both operand orders; combining two quadratic values
    requires the same d (raises :class:`FieldMismatchError` otherwise).
    Construct via :func:`quad_ext` when the inputs may normalise to a plain
    rational.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0:
            raise ValueError("QuadExt requires b != 0; use quad_ext() to normalise")
        if self.d < 2:
            raise ValueError("QuadExt requires squarefree d >= 2")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        r = _as_fraction(other)
        if r is not None:
            return QuadExt(self.a + r, self.b, self.d)
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatchError(f"sqrt({self.d}) vs sqrt({other.d})")
            b = self.b + other.b
            a = self.a + other.a
            return a if b == 0 else QuadExt(a, b, self.d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        r = _as_fraction(other)
        if r is not None:
            return QuadExt(self.a - r, self.b, self.d)
        if isinstance(other, QuadExt):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        r = _as_fraction(other)
        if r is not None:
            return QuadExt(r - self.a, -self.b, self.d)
        return NotImplemented

    def __mul__(self, other):
        r = _as_fraction(other)
        if r is not None:
            if r == 0:
                return Fraction(0)
            return QuadExt(self.a * r, self.b * r, self.d)
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatchError(f"sqrt({self.d}) vs sqrt({other.d})")
            a = self.a * other.a + self.b * other.b * self.d
            b = self.a * other.b + self.b * other.a
            return a if b == 0 else QuadExt(a, b, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # norm a^2 - d*b^2 never vanishes for b != 0 and squarefree d >= 2
        norm = self.a * self.a - self.b * self.b * self.d
        return QuadExt(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        r = _as_fraction(other)
        if r is not None:
            if r == 0:
                raise ZeroDivisionError("division by zero")
            return QuadExt(self.a / r, self.b / r, self.d)
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatchError(f"sqrt({self.d}) vs sqrt({other.d})")
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        r = _as_fraction(other)
        if r is not None:
            return self.inverse() * r if r != 0 else Fraction(0)
        return NotImplemented

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    # -- ordering ---------------------------------------------------------

    def sign(self) -> int:
        """Exact sign: compares a^2 against b^2*d when a and b disagree."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if lhs == rhs:  # impossible for squarefree d >= 2, kept for safety
            return 0
        return sa if lhs > rhs else sb

    def _cmp(self, other) -> int:
        diff = self - other
        if isinstance(diff, Fraction):
            return (diff > 0) - (diff < 0)
        return diff.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- misc -------------------------------------------------------------

    def __bool__(self):
        return True  # b != 0 means the value is never zero

    def __float__(self):
        # convenience for display only; never used in decisions
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt({self.d})"


Scalar = Union[Fraction, QuadExt]


def quad_ext(a, b, d: int) -> Scalar:
    """Build a + b*sqrt(d) in canonical form, demoting rationals.

    d may be any integer >= 0; its square part is absorbed into b.
    """
    a = Fraction(a)
    b = Fraction(b)
    if d < 0:
        raise ValueError("quad_ext requires d >= 0")
    if b == 0 or d == 0:
        return a
    s, core = squarefree_split(d)
    if core == 1:
        return a + b * s
    return QuadExt(a, b * s, core)


def sign_of(x) -> int:
    """Exact sign of a scalar: -1, 0 or +1."""
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def solve_quadratic(c2, c1, c0) -> list[Scalar]:
    """All real roots of c2*x^2 + c1*x + c0 = 0 with rational coefficients.

    Rational roots come back as ``Fraction``; an irrational pair comes back
    as conjugate :class:`QuadExt` values over the squarefree core of the
    discriminant, larger root first.  The zero polynomial is rejected.
    """
    c2, c1, c0 = Fraction(c2), Fraction(c1), Fraction(c0)
    if c2 == 0:
        if c1 == 0:
            if c0 == 0:
                raise ValueError("zero polynomial has no defined root set")
            return []
        return [-c0 / c1]
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    mid = -c1 / (2 * c2)
    if disc == 0:
        return [mid]
    # sqrt(p/q) = sqrt(p*q)/q
    s, core = squarefree_split(disc.numerator * disc.denominator)
    if core == 1:
        half = Fraction(s, disc.denominator) / (2 * c2)
        return [mid + half, mid - half]
    half = Fraction(s, disc.denominator) / (2 * c2)
    return [QuadExt(mid, half, core), QuadExt(mid, -half, core)]


# -- text form ------------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_RATIONAL_RE = re.compile(_RAT)
_QUAD_RE = re.compile(
    rf"(?P<a>{_RAT})\s*\+\s*(?P<b>{_RAT})\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\)"
)


def parse_rational(text: str) -> Fraction:
    """Parse 'p', '+p', '-p' or 'p/q'; the denominator must be positive."""
    text = text.strip()
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}") from None


def parse_scalar(text: str) -> Scalar:
    """Parse a rational or an 'a + b*sqrt(d)' value (spaces optional)."""
    text = text.strip()
    if "sqrt" not in text:
        return parse_rational(text)
    m = _QUAD_RE.fullmatch(text)
    if not m:
        raise ValueError(f"not a scalar: {text!r}")
    return quad_ext(parse_rational(m["a"]), parse_rational(m["b"]), int(m["d"]))


def format_scalar(x, compact: bool = False) -> str:
    """Inverse of :func:`parse_scalar`; compact form has no spaces."""
    if isinstance(x, QuadExt):
        if compact:
            return f"{x.a}+{x.b}*sqrt({x.d})"
        return str(x)
    return str(Fraction(x))
