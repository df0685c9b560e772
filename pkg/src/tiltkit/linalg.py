"""Exact spectral invariants: characteristic/minimal polynomials, definiteness,
matrix orders, Coxeter matrices and the Euler form.

Verdicts are computed over the rationals only; floating point never decides
anything here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .matrix import RationalMatrix, SingularMatrixError, solve
from .poly import Polynomial, cyclotomic, is_cyclotomic_product, lcm

POSITIVE_DEFINITE = "positive_definite"
POSITIVE_SEMIDEFINITE_SINGULAR = "positive_semidefinite_singular"
INDEFINITE = "indefinite"
NEGATIVE_SEMIDEFINITE_SINGULAR = "negative_semidefinite_singular"
NEGATIVE_DEFINITE = "negative_definite"

ORDER_SEARCH_CAP = 10_000


def char_poly(m: RationalMatrix) -> Polynomial:
    """Monic characteristic polynomial det(xE - M) via Faddeev-LeVerrier."""
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    eye = RationalMatrix.identity(n)
    coeffs = [Fraction(1)]  # descending powers, leading first
    acc = eye
    for k in range(1, n + 1):
        acc = m @ acc
        c = -acc.trace() / k
        coeffs.append(c)
        if k < n:
            acc = acc + eye.scale(c)
    return Polynomial(list(reversed(coeffs)))


def min_poly(m: RationalMatrix) -> tuple[Polynomial, bool]:
    """Monic minimal polynomial and a diagonalizability flag.

    The flag is exactly squarefreeness of the minimal polynomial.
    """
    if not m.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    n = m.nrows
    powers = [RationalMatrix.identity(n)]
    for _ in range(n):
        powers.append(m @ powers[-1])

    def vec(a: RationalMatrix) -> list[Fraction]:
        return [x for row in a.entries for x in row]

    for k in range(1, n + 1):
        basis = RationalMatrix(list(zip(*[vec(powers[i]) for i in range(k)])))
        target = vec(powers[k])
        sol = solve(basis, target)
        if sol is not None:
            p = Polynomial([-c for c in sol] + [Fraction(1)])
            return p, p.is_squarefree
    raise AssertionError("Cayley-Hamilton guarantees dependence by degree n")


def evaluate_at_matrix(p: Polynomial, m: RationalMatrix) -> RationalMatrix:
    acc = RationalMatrix.zero(m.nrows)
    eye = RationalMatrix.identity(m.nrows)
    for c in reversed(p.coeffs):
        acc = acc @ m + eye.scale(c)
    return acc


def _principal_minor_classification(s: RationalMatrix) -> str:
    """Classify a symmetric matrix by exhaustive principal minors (n <= ~12)."""
    n = s.nrows
    dets: dict[tuple[int, ...], Fraction] = {}
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            sub = RationalMatrix(
                [[s.entries[i][j] for j in subset] for i in subset]
            )
            dets[subset] = sub.det()
    psd = all(d >= 0 for d in dets.values())
    nsd = all(
        (d >= 0 if len(k) % 2 == 0 else d <= 0) for k, d in dets.items()
    )
    full = dets[tuple(range(n))]
    if psd:
        return POSITIVE_DEFINITE if full != 0 else POSITIVE_SEMIDEFINITE_SINGULAR
    if nsd:
        return NEGATIVE_DEFINITE if full != 0 else NEGATIVE_SEMIDEFINITE_SINGULAR
    return INDEFINITE


def definiteness(s: RationalMatrix) -> str:
    """Exact definiteness class of a symmetric matrix.

    LDL^T with diagonal pivoting; when progress is blocked by a vanishing
    diagonal the classification falls back to principal minors.
    """
    if not s.is_symmetric:
        raise ValueError("definiteness requires a symmetric matrix")
    n = s.nrows
    a = [list(row) for row in s.entries]
    active = list(range(n))
    pos = neg = 0
    while active:
        if all(a[i][j] == 0 for i in active for j in active):
            break
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is None:
            # zero diagonal with a nonzero off-diagonal entry left
            return _principal_minor_classification(s)
        d = a[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        pivot_row = list(a[pivot])
        for i in active:
            if a[i][pivot] == 0:
                continue
            f = a[i][pivot] / d
            for j in active:
                a[i][j] -= f * pivot_row[j]
            a[i][pivot] = Fraction(0)
            a[pivot][i] = Fraction(0)
    zero = n - pos - neg
    if pos and neg:
        return INDEFINITE
    if neg == 0:
        return POSITIVE_DEFINITE if zero == 0 else POSITIVE_SEMIDEFINITE_SINGULAR
    return NEGATIVE_DEFINITE if zero == 0 else NEGATIVE_SEMIDEFINITE_SINGULAR


@dataclass(frozen=True)
class MatrixOrder:
    """Multiplicative order of an integral matrix with determinant +-1."""

    kind: str  # "finite" | "certified_infinite" | "unknown"
    order: int | None = None
    bound: int | None = None
    reason: str = ""


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def matrix_order(m: RationalMatrix, cap: int = ORDER_SEARCH_CAP) -> MatrixOrder:
    if not m.is_square:
        raise ValueError("order of a non-square matrix")
    d = m.det()
    if d not in (1, -1):
        raise ValueError(f"matrix order requires det = +-1, got {d}")
    n = m.nrows
    eye = RationalMatrix.identity(n)
    if m == eye:
        return MatrixOrder("finite", order=1)
    p = char_poly(m)
    if m.is_integral:
        ok, indices = is_cyclotomic_product(p)
        if not ok:
            # Kronecker: a monic integral polynomial with all roots on the
            # unit circle is a product of cyclotomics, so some eigenvalue
            # lies off the circle and powers never return to the identity.
            return MatrixOrder(
                "certified_infinite",
                reason="characteristic polynomial has a root off the unit circle",
            )
        bound = lcm(indices)
        for k in _divisors(bound):
            if m.power(k) == eye:
                return MatrixOrder("finite", order=k)
        return MatrixOrder(
            "certified_infinite",
            reason="eigenvalues are roots of unity but the matrix is not semisimple",
        )
    # rational, non-integral input
    if n == 2 and d == 1:
        t = m.trace()
        if abs(t) > 2:
            return MatrixOrder("certified_infinite", reason="|trace| > 2")
        if abs(t) == 2 and m != eye and m != -eye:
            return MatrixOrder(
                "certified_infinite", reason="parabolic: trace +-2 but not +-E"
            )
    power = m
    for k in range(1, cap + 1):
        if power == eye:
            return MatrixOrder("finite", order=k)
        power = power @ m
    return MatrixOrder("unknown", bound=cap)


def coxeter_matrix(c: RationalMatrix) -> RationalMatrix:
    """Coxeter matrix -C^T C^{-1} of an invertible Cartan matrix."""
    if not c.is_square:
        raise ValueError("Coxeter matrix of a non-square matrix")
    try:
        inv = c.inverse()
    except SingularMatrixError:
        raise SingularCartanError(
            "Cartan matrix is singular (det = 0); no Coxeter matrix"
        ) from None
    return -(c.T @ inv)


class SingularCartanError(ValueError):
    """Coxeter-matrix or Euler-form request on a singular Cartan matrix."""


def euler_form(
    c: RationalMatrix, x: Sequence, y: Sequence
) -> Fraction:
    """Homological bilinear form x^T C^{-T} y for invertible C."""
    if not c.is_square:
        raise ValueError("Euler form requires a square matrix")
    if len(x) != c.nrows or len(y) != c.nrows:
        raise ValueError("vector dimension mismatch")
    try:
        cinv_t = c.inverse().T
    except SingularMatrixError:
        raise SingularCartanError("Euler form undefined: singular matrix") from None
    w = cinv_t.vec_mul(y)
    return sum(Fraction(a) * b for a, b in zip(x, w))


def trivial_extension_cartan(c: RationalMatrix) -> RationalMatrix:
    """Cartan matrix C + C^T of the trivial extension."""
    if not c.is_square:
        raise ValueError("trivial extension of a non-square Cartan matrix")
    return c + c.T
