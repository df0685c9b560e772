"""Bundled Cartan/Coxeter verdicts.

`analyze` collects, for one Cartan matrix: regularity, exact definiteness of
the symmetrization, positivity of the Euler form, cyclotomic type of the
Coxeter matrix, the eigenvalue-one test, diagonalizability, and the Coxeter
trace.  All verdicts are exact except the generalized (non-integral)
cyclotomic check, which is numeric and labelled as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    POSITIVE_DEFINITE,
    SingularCartanError,
    char_poly,
    coxeter_matrix,
    definiteness,
    min_poly,
    trivial_extension_cartan,
)
from .matrix import RationalMatrix
from .poly import Polynomial, is_cyclotomic_product

CYCLOTOMIC = "cyclotomic"
GENERALIZED_CYCLOTOMIC_NUMERIC = "generalized_cyclotomic_numeric"
NOT_CYCLOTOMIC = "no"

_UNIT_CIRCLE_TOL = 1e-9


@dataclass(frozen=True)
class AnalysisReport:
    regular: bool
    symmetrized_definiteness: str
    euler_form_positive: bool | None
    cyclotomic_type: str | None
    cyclotomic_indices: tuple[int, ...] | None
    has_eigenvalue_one: bool | None
    diagonalizable: bool | None
    coxeter_trace: Fraction | None
    coxeter: RationalMatrix | None
    coxeter_char_poly: Polynomial | None

    def to_dict(self) -> dict:
        return {
            "regular": self.regular,
            "symmetrized_definiteness": self.symmetrized_definiteness,
            "euler_form_positive": self.euler_form_positive,
            "cyclotomic_type": self.cyclotomic_type,
            "cyclotomic_indices": (
                list(self.cyclotomic_indices)
                if self.cyclotomic_indices is not None
                else None
            ),
            "has_eigenvalue_one": self.has_eigenvalue_one,
            "diagonalizable": self.diagonalizable,
            "coxeter_trace": (
                str(self.coxeter_trace) if self.coxeter_trace is not None else None
            ),
            "coxeter": (
                [[str(x) for x in row] for row in self.coxeter.entries]
                if self.coxeter is not None
                else None
            ),
            "coxeter_char_poly": (
                [str(c) for c in self.coxeter_char_poly.coeffs]
                if self.coxeter_char_poly is not None
                else None
            ),
        }


def _roots_on_unit_circle(p: Polynomial, tol: float = _UNIT_CIRCLE_TOL) -> bool:
    """Numeric advisory check; never used when an exact verdict exists."""
    import numpy as np

    # root-find the squarefree part: repeated roots cost numeric accuracy
    p = p.divmod(p.gcd(p.derivative()))[0]
    coeffs = [float(c) for c in reversed(p.coeffs)]
    roots = np.roots(coeffs)
    return bool(np.all(np.abs(np.abs(roots) - 1.0) <= tol))


def classify_coxeter_poly(p: Polynomial) -> tuple[str, tuple[int, ...] | None]:
    if p.is_integral:
        ok, indices = is_cyclotomic_product(p)
        # a monic integral polynomial with all roots on the unit circle is a
        # product of cyclotomics, so failure is an exact negative verdict
        return (CYCLOTOMIC, indices) if ok else (NOT_CYCLOTOMIC, None)
    if _roots_on_unit_circle(p):
        return GENERALIZED_CYCLOTOMIC_NUMERIC, None
    return NOT_CYCLOTOMIC, None


def analyze(
    c: RationalMatrix, coxeter_override: RationalMatrix | None = None
) -> AnalysisReport:
    """Full report for a square Cartan matrix.

    For a singular Cartan matrix the Coxeter-derived fields are omitted
    unless an externally computed Coxeter matrix is supplied; that matrix is
    used for reporting only and is never derived from C.
    """
    if not c.is_square:
        raise ValueError("analyze requires a square matrix")
    symmetrized = definiteness(trivial_extension_cartan(c))
    regular = c.det() != 0

    phi = None
    if regular:
        phi = coxeter_matrix(c)
    elif coxeter_override is not None:
        phi = coxeter_override

    if phi is None:
        return AnalysisReport(
            regular=False,
            symmetrized_definiteness=symmetrized,
            euler_form_positive=None,
            cyclotomic_type=None,
            cyclotomic_indices=None,
            has_eigenvalue_one=None,
            diagonalizable=None,
            coxeter_trace=None,
            coxeter=None,
            coxeter_char_poly=None,
        )

    p = char_poly(phi)
    ctype, indices = classify_coxeter_poly(p)
    has_one = p(1) == 0
    _, diagonalizable = min_poly(phi)

    euler_positive = None
    if regular:
        inv = c.inverse()
        euler_positive = (
            definiteness(inv.T + inv) == POSITIVE_DEFINITE
        )
        # the Euler form is positive definite exactly when the symmetrized
        # Cartan matrix is; both are exact, so disagreement is a bug
        assert euler_positive == (symmetrized == POSITIVE_DEFINITE)

    if symmetrized == POSITIVE_DEFINITE and regular:
        # positive definiteness forces all three spectral conclusions
        assert ctype != NOT_CYCLOTOMIC
        assert not has_one
        assert diagonalizable

    return AnalysisReport(
        regular=regular,
        symmetrized_definiteness=symmetrized,
        euler_form_positive=euler_positive,
        cyclotomic_type=ctype,
        cyclotomic_indices=indices,
        has_eigenvalue_one=has_one,
        diagonalizable=diagonalizable,
        coxeter_trace=phi.trace(),
        coxeter=phi,
        coxeter_char_poly=p,
    )


def coxeter_trace_is_minus_one(c: RationalMatrix) -> bool:
    """Exact test trace(-C^T C^{-1}) = -1."""
    if c.det() == 0:
        raise SingularCartanError("trace test requires a regular Cartan matrix")
    return coxeter_matrix(c).trace() == -1


@dataclass(frozen=True)
class NakayamaPermutation:
    """Permutation of 1..n in cycle notation (fixed points included)."""

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        points = [p for cyc in self.cycles for p in cyc]
        if len(points) != len(set(points)):
            raise ValueError("cycles are not disjoint")
        if sorted(points) != list(range(1, len(points) + 1)):
            raise ValueError("cycles must cover 1..n exactly")

    @property
    def is_odd(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles) % 2 == 1


def selfinjective_coxeter_poly(
    sigma: NakayamaPermutation,
) -> tuple[Polynomial, bool]:
    """Coxeter polynomial of a selfinjective algebra from its Nakayama
    permutation: product over cycles of x^len + 1 (len odd) or x^len - 1
    (len even), plus the exact eigenvalue-one flag.
    """
    poly = Polynomial([1])
    for cyc in sigma.cycles:
        length = len(cyc)
        sign = 1 if length % 2 == 1 else -1
        poly = poly * Polynomial([sign] + [0] * (length - 1) + [1])
    return poly, poly(1) == 0
