"""Integer solution sets of rational quadratic forms.

For positive definite forms the full (finite) solution set of v^T C v = z is
enumerated with exact arithmetic: branch bounds come from an LDL^T
decomposition, float square roots are only used to seed integer ranges that
are widened by one and every candidate is verified exactly.  A bounded-box
brute force is provided for arbitrary symmetric forms.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .linalg import POSITIVE_DEFINITE, definiteness
from .matrix import RationalMatrix


def _form_value(c: RationalMatrix, v) -> Fraction:
    w = c.vec_mul(v)
    return sum(Fraction(x) * y for x, y in zip(v, w))


def _ldl(c: RationalMatrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """C = L D L^T for positive definite C; returns (diag of D, L)."""
    n = c.nrows
    a = [list(row) for row in c.entries]
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d: list[Fraction] = []
    for k in range(n):
        pivot = a[k][k]
        assert pivot > 0, "LDL^T requires a positive definite matrix"
        d.append(pivot)
        pivot_row = list(a[k])
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            lower[i][k] = f
            for j in range(k, n):
                a[i][j] -= f * pivot_row[j]
    return d, lower


def _int_range(center: Fraction, radius2: Fraction) -> range:
    """Integers x with (x - center)^2 <= radius2, widened before exact use."""
    if radius2 < 0:
        return range(0)
    r = math.sqrt(float(radius2))
    lo = math.floor(float(center) - r) - 1
    hi = math.ceil(float(center) + r) + 1
    return range(lo, hi + 1)


def solutions(c: RationalMatrix, z) -> tuple[tuple[int, ...], ...]:
    """All integer vectors v with v^T C v = z, for positive definite C.

    The set is finite; it is empty for z < 0 and {0} for z = 0.
    """
    if not c.is_symmetric:
        raise ValueError("solutions requires a symmetric matrix")
    if definiteness(c) != POSITIVE_DEFINITE:
        raise ValueError("exact enumeration requires a positive definite form")
    z = Fraction(z)
    if z < 0:
        return ()
    n = c.nrows
    if z == 0:
        return ((0,) * n,)
    d, lower = _ldl(c)

    out: list[tuple[int, ...]] = []
    x = [0] * n

    def descend(i: int, budget: Fraction) -> None:
        # y_i = x_i + sum_{j > i} L[j][i] x_j must satisfy d_i y_i^2 <= budget
        shift = sum(lower[j][i] * x[j] for j in range(i + 1, n))
        for xi in _int_range(-shift, budget / d[i]):
            x[i] = xi
            y = xi + shift
            used = d[i] * y * y
            if i == 0:
                if used == budget:
                    out.append(tuple(x))
            elif used <= budget:
                descend(i - 1, budget - used)
        x[i] = 0

    descend(n - 1, z)
    # exact final check: the pruning above is already exact, so every vector
    # collected satisfies the equation; assert rather than filter
    assert all(_form_value(c, v) == z for v in out)
    return tuple(sorted(out))


def bounded_box(
    c: RationalMatrix, z, radius: int
) -> tuple[tuple[int, ...], ...]:
    """All integer vectors with coordinates in [-radius, radius] solving
    v^T C v = z, for any symmetric C; exact brute force."""
    if not c.is_symmetric:
        raise ValueError("bounded_box requires a symmetric matrix")
    if radius < 0:
        raise ValueError("radius must be >= 0")
    z = Fraction(z)
    n = c.nrows
    out = [
        v
        for v in itertools.product(range(-radius, radius + 1), repeat=n)
        if _form_value(c, v) == z
    ]
    return tuple(sorted(out))
