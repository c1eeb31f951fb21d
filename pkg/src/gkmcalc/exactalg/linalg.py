"""
Dense exact linear algebra over the rationals.

Gauss-Jordan elimination on :class:`fractions.Fraction` entries. Nothing here
is clever; the matrices this package builds have at most a few hundred
columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple, Sequence

from .polynomial import as_rational

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class RationalMatrix:
    """Row-major rectangular matrix of Fractions."""

    rows: tuple[Vector, ...]
    ncols: int

    def __post_init__(self):
        if self.ncols < 0:
            raise ValueError("column count must be nonnegative")
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError(f"row of length {len(r)} in a {self.ncols}-column matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "RationalMatrix":
        rows = [tuple(as_rational(v) for v in r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(tuple(rows), ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls(tuple((Fraction(0),) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(
            tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), n
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)), self.nrows
        )

    def apply(self, v: Sequence) -> Vector:
        v = [as_rational(x) for x in v]
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().rows
        return RationalMatrix(
            tuple(
                tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols)
                for r in self.rows
            ),
            other.ncols,
        )

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return RationalMatrix(self.rows + other.rows, self.ncols)


class RrefResult(NamedTuple):
    matrix: RationalMatrix
    pivots: tuple[int, ...]
    rank: int


def rref(m: RationalMatrix) -> RrefResult:
    """Reduced row echelon form; zero rows are kept at the bottom."""
    a = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RrefResult(RationalMatrix(tuple(tuple(row) for row in a), ncols), tuple(pivots), len(pivots))


def rank(m: RationalMatrix) -> int:
    return rref(m).rank


def nullspace_basis(m: RationalMatrix) -> list[Vector]:
    """Right kernel basis, one vector per free column of the rref.

    The vector for free column j has a 1 in position j, zeros in the other
    free positions, and the negated rref entries in the pivot positions.
    """
    red, pivots, _ = rref(m)
    pivot_set = set(pivots)
    basis = []
    for j in range(m.ncols):
        if j in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[j] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -red.rows[row][j]
        basis.append(tuple(v))
    return basis


def solve(m: RationalMatrix, b: Sequence) -> Vector | None:
    """One exact solution of ``m x = b`` (free variables set to 0), or None."""
    b = [as_rational(x) for x in b]
    if len(b) != m.nrows:
        raise ValueError("right-hand side has wrong length")
    aug = RationalMatrix(tuple(r + (bi,) for r, bi in zip(m.rows, b)), m.ncols + 1)
    red, pivots, _ = rref(aug)
    if m.ncols in pivots:
        return None
    x = [Fraction(0)] * m.ncols
    for row, pc in enumerate(pivots):
        x[pc] = red.rows[row][m.ncols]
    return tuple(x)


def inverse(m: RationalMatrix) -> RationalMatrix:
    n = m.nrows
    if m.ncols != n:
        raise ValueError("only square matrices have inverses")
    ident = RationalMatrix.identity(n)
    aug = RationalMatrix(tuple(r + e for r, e in zip(m.rows, ident.rows)), 2 * n)
    red, pivots, rk = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ValueError("matrix is singular")
    return RationalMatrix(tuple(r[n:] for r in red.rows), n)


def primitive_integer_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to coprime integers."""
    v = [as_rational(x) for x in v]
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for i in ints:
        g = gcd(g, i)
    if g == 0:
        return tuple(ints)
    return tuple(i // g for i in ints)
