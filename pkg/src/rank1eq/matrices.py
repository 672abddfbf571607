"""Dense exact matrices over Q or a single real quadratic extension Q(sqrt(d)).

Matrices are immutable; every operation returns a new value.  Rank uses
fraction-free (Bareiss-style) elimination so intermediate entries stay
polynomial in the inputs, and all pivot choices are first-nonzero in
row-major order, making every result reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import FieldMismatchError, QuadExt, Scalar


class ShapeError(ValueError):
    """Raised on dimension mismatches."""


def _coerce(x) -> Scalar:
    if isinstance(x, QuadExt):
        return x
    return Fraction(x)


def coerce_vector(xs: Iterable) -> tuple[Scalar, ...]:
    return tuple(_coerce(x) for x in xs)


@dataclass(frozen=True, slots=True)
class RankOneFactor:
    """Vectors (left, right) with outer product left * right^T."""

    left: tuple[Scalar, ...]
    right: tuple[Scalar, ...]

    def outer(self) -> "ExactMatrix":
        return ExactMatrix.from_outer(self.left, self.right)


@dataclass(frozen=True, slots=True)
class ExactMatrix:
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ShapeError("matrix must have at least one row and one column")
        n = len(self.entries[0])
        if any(len(row) != n for row in self.entries):
            raise ShapeError("ragged rows")
        ds = {e.d for row in self.entries for e in row if isinstance(e, QuadExt)}
        if len(ds) > 1:
            raise FieldMismatchError(f"entries mix extensions {sorted(ds)}")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        return cls(tuple(coerce_vector(row) for row in rows))

    @classmethod
    def zeros(cls, m: int, n: int) -> "ExactMatrix":
        zero = Fraction(0)
        return cls(tuple((zero,) * n for _ in range(m)))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_outer(cls, left: Sequence, right: Sequence) -> "ExactMatrix":
        left = coerce_vector(left)
        right = coerce_vector(right)
        return cls(tuple(tuple(l * r for r in right) for l in left))

    # -- basic access ------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        return self.entries[ij[0]][ij[1]]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.entries)))

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.entries for e in row)

    def first_nonzero(self) -> tuple[int, int] | None:
        """Row-major position of the first nonzero entry, or None."""
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e != 0:
                    return (i, j)
        return None

    # -- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other: "ExactMatrix"):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(-e for e in row) for row in self.entries))

    def scale(self, x) -> "ExactMatrix":
        x = _coerce(x)
        return ExactMatrix(tuple(tuple(x * e for e in row) for row in self.entries))

    def matvec(self, x: Sequence) -> tuple[Scalar, ...]:
        if len(x) != self.n:
            raise ShapeError("vector length must equal column count")
        return tuple(sum(e * v for e, v in zip(row, x)) for row in self.entries)

    def vecmat(self, y: Sequence) -> tuple[Scalar, ...]:
        if len(y) != self.m:
            raise ShapeError("vector length must equal row count")
        return tuple(
            sum(self.entries[i][j] * y[i] for i in range(self.m))
            for j in range(self.n)
        )

    def add_outer(self, left: Sequence, right: Sequence, sign: int = 1) -> "ExactMatrix":
        """self + sign * left * right^T with sign in {+1, -1}."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if len(left) != self.m or len(right) != self.n:
            raise ShapeError("outer-product dimensions do not match")
        return ExactMatrix(
            tuple(
                tuple(e + sign * (l * r) for e, r in zip(row, right))
                for row, l in zip(self.entries, left)
            )
        )

    # -- rank and factorisations -------------------------------------------

    def rank(self) -> int:
        """Exact rank by fraction-free elimination."""
        a = [list(row) for row in self.entries]
        m, n = self.m, self.n
        prev = Fraction(1)
        r = 0
        for c in range(n):
            piv = next((s for s in range(r, m) if a[s][c] != 0), None)
            if piv is None:
                continue
            if piv != r:
                a[r], a[piv] = a[piv], a[r]
            pivot = a[r][c]
            for s in range(r + 1, m):
                factor = a[s][c]
                row_s = a[s]
                row_r = a[r]
                for t in range(c + 1, n):
                    row_s[t] = (row_s[t] * pivot - factor * row_r[t]) / prev
                row_s[c] = Fraction(0)
            prev = pivot
            r += 1
            if r == m:
                break
        return r

    def is_rank_one(self) -> RankOneFactor | None:
        """Rank-1 factorisation anchored at the first nonzero entry.

        Returns left = column j, right = row i scaled by 1/m[i][j], where
        (i, j) is the first nonzero position in row-major order; None when
        the matrix is zero or has rank > 1.
        """
        pos = self.first_nonzero()
        if pos is None:
            return None
        i, j = pos
        pivot = self.entries[i][j]
        left = self.col(j)
        right = tuple(e / pivot for e in self.row(i))
        for s, row in enumerate(self.entries):
            l = left[s]
            for t, e in enumerate(row):
                if e != l * right[t]:
                    return None
        return RankOneFactor(left, right)

    def additively_separable(self) -> tuple[tuple[Scalar, ...], tuple[Scalar, ...]] | None:
        """Decompose as ones_m * u^T + v * ones_n^T if possible.

        Picks the gauge v[0] = 0: u is the first row and v is the first
        column shifted to start at zero.  Returns (u, v) or None.
        """
        u = self.row(0)
        anchor = self.entries[0][0]
        v = tuple(e - anchor for e in self.col(0))
        for i, row in enumerate(self.entries):
            vi = v[i]
            for j, e in enumerate(row):
                if e != u[j] + vi:
                    return None
        return (u, v)

    def __str__(self):
        from .scalars import format_scalar

        return "\n".join(
            " ".join(format_scalar(e, compact=True) for e in row)
            for row in self.entries
        )


def solve_linear(
    mat: ExactMatrix, rhs: Sequence
) -> tuple[str, tuple[Scalar, ...] | None]:
    """Exact solve of mat * x = rhs.

    Returns ("unique", x), ("none", None) for an inconsistent system, or
    ("many", None) for an underdetermined consistent one.
    """
    if len(rhs) != mat.m:
        raise ShapeError("right-hand side length must equal row count")
    m, n = mat.m, mat.n
    a = [list(row) + [_coerce(b)] for row, b in zip(mat.entries, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        piv = next((s for s in range(r, m) if a[s][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [e / inv for e in a[r]]
        for s in range(m):
            if s != r and a[s][c] != 0:
                f = a[s][c]
                a[s] = [e - f * er for e, er in zip(a[s], a[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    for s in range(r, m):
        if a[s][n] != 0:
            return ("none", None)
    if len(pivot_cols) < n:
        return ("many", None)
    x: list[Scalar] = [Fraction(0)] * n
    for row_idx, c in enumerate(pivot_cols):
        x[c] = a[row_idx][n]
    return ("unique", tuple(x))


def in_column_space(mat: ExactMatrix, z: Sequence) -> bool:
    """Whether z lies in the span of mat's columns (exact)."""
    status, _ = solve_linear(mat, z)
    return status != "none"
