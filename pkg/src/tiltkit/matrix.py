"""Exact rational matrices.

Every verdict-bearing computation in the package runs through this module.
Entries are ``fractions.Fraction`` and all operations are exact; no floating
point ever enters a result returned from here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class SingularMatrixError(ValueError):
    """Raised when an inverse (or Coxeter matrix) of a singular matrix is requested."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


class RationalMatrix:
    """Immutable matrix over the rationals.

    Hashable, so matrices can be deduplicated exactly during group searches.
    """

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(_frac(x) for x in row) for row in rows)
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("all rows must have the same length")
        object.__setattr__(self, "nrows", len(entries))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    # -- basics ------------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int | None = None) -> "RationalMatrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def int_entries(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_integral:
            raise ValueError("matrix is not integral")
        return tuple(tuple(int(x) for x in row) for row in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix) and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        rows = "; ".join(
            " ".join(str(x) for x in row) for row in self.entries
        )
        return f"RationalMatrix[{rows}]"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-x for x in row] for row in self.entries])

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix([[c * x for x in row] for row in self.entries])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"dimension mismatch: {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}"
            )
        cols = list(zip(*other.entries))
        return RationalMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self.entries
            ]
        )

    def vec_mul(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix times column vector, exactly."""
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        w = [_frac(x) for x in v]
        return tuple(sum(a * b for a, b in zip(row, w)) for row in self.entries)

    def power(self, k: int) -> "RationalMatrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse().power(-k)
        result = RationalMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.entries)))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum(self.entries[i][i] for i in range(self.nrows))

    def column_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(col) for col in zip(*self.entries))

    def _same_shape(self, other: "RationalMatrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    # -- elimination-based operations ---------------------------------------

    def det(self) -> Fraction:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(row) for row in self.entries]
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            det *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col] == 0:
                    continue
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
        return det

    def inverse(self) -> "RationalMatrix":
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        a = [list(row) + [Fraction(int(i == j)) for j in range(n)]
             for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular (det = 0)")
            a[col], a[pivot] = a[pivot], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return RationalMatrix([row[n:] for row in a])


def solve(a: RationalMatrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """Solve ``a x = b`` exactly; None when inconsistent.

    For underdetermined consistent systems one solution is returned (free
    variables set to zero).
    """
    m, n = a.nrows, a.ncols
    if len(b) != m:
        raise ValueError("right-hand side length mismatch")
    rows = [list(a.entries[i]) + [_frac(b[i])] for i in range(m)]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((k for k in range(r, m) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(m):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for k in range(r, m):
        if rows[k][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = rows[i][n]
    return tuple(x)
