"""Exploration of groups generated by mutation g-matrices.

Breadth-first enumeration of products of generator matrices, a
reachability search for the shift g-matrix with an exact column-sum
unreachability certificate, the alternating two-generator search with its
own exactness certificates, and the quadratic-form growth sequences along
alternating mutation rays.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import matrix_order
from .matrix import RationalMatrix


@dataclass(frozen=True)
class FrontierNode:
    matrix: RationalMatrix
    word: tuple[str, ...]  # shortest word, lexicographic tie-break
    depth: int


@dataclass(frozen=True)
class Frontier:
    nodes: tuple[FrontierNode, ...]
    depth: int
    edges: tuple[tuple[int, str, int], ...]  # (from node, generator, to node)


def _check_generators(generators: dict[str, RationalMatrix]) -> int:
    if not generators:
        raise ValueError("need at least one generator")
    sizes = {g.nrows for g in generators.values()} | {
        g.ncols for g in generators.values()
    }
    if len(sizes) != 1:
        raise ValueError("generators must be square matrices of one size")
    return sizes.pop()


def generate(generators: dict[str, RationalMatrix], depth: int) -> Frontier:
    """All distinct products of at most `depth` generators, starting from the
    identity; exact deduplication, words grown by right multiplication."""
    n = _check_generators(generators)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    names = sorted(generators)
    start = RationalMatrix.identity(n)
    nodes: list[FrontierNode] = [FrontierNode(start, (), 0)]
    index = {start: 0}
    edges: list[tuple[int, str, int]] = []
    layer = [0]
    for d in range(1, depth + 1):
        nxt: list[int] = []
        for i in layer:
            node = nodes[i]
            for name in names:
                m = node.matrix @ generators[name]
                j = index.get(m)
                if j is None:
                    j = len(nodes)
                    index[m] = j
                    nodes.append(FrontierNode(m, node.word + (name,), d))
                    nxt.append(j)
                edges.append((i, name, j))
        layer = nxt
        if not layer:
            break
    return Frontier(tuple(nodes), depth, tuple(edges))


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "not_found_within_depth" | "certified_unreachable"
    word: tuple[str, ...] | None = None
    target: RationalMatrix | None = None
    depth_searched: int | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "word": list(self.word) if self.word is not None else None,
            "target": (
                [[str(x) for x in row] for row in self.target.entries]
                if self.target is not None
                else None
            ),
            "depth_searched": self.depth_searched,
            "reason": self.reason,
        }


def _permutations(n: int):
    import itertools

    for perm in itertools.permutations(range(n)):
        yield RationalMatrix(
            [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]
        )


def shift_targets(n: int) -> list[RationalMatrix]:
    """Matrices witnessing the shift up to algebra automorphism: negatives
    of permutation matrices."""
    return [-p for p in _permutations(n)]


def reach_shift(
    generators: dict[str, RationalMatrix], max_depth: int
) -> SearchResult:
    """Search for a product of generators equal to a negated permutation.

    When every generator has all column sums 1, products keep that property
    while every target has column sums -1, so the search is certified
    unreachable without enumeration.
    """
    n = _check_generators(generators)
    if all(
        all(s == 1 for s in g.column_sums()) for g in generators.values()
    ):
        return SearchResult(
            status="certified_unreachable",
            reason=(
                "all generators have column sums 1, a property closed under "
                "products; every negated permutation has column sums -1"
            ),
        )
    targets = set(shift_targets(n))
    frontier = generate(generators, max_depth)
    for node in frontier.nodes:
        if node.matrix in targets:
            return SearchResult(
                status="found",
                word=node.word,
                target=node.matrix,
                depth_searched=node.depth,
            )
    return SearchResult(status="not_found_within_depth", depth_searched=max_depth)


_ANTIDIAG = RationalMatrix([[0, -1], [-1, 0]])


def alternating_shift_search(
    mu1: RationalMatrix, mu2: RationalMatrix, bound: int = 64
) -> SearchResult:
    """Search alternating words mu2, mu2 mu1, mu2 mu1 mu2, ... (2x2 case)
    for a negated permutation matrix.

    With G = mu2 mu1, even lengths 2s give G^s and odd lengths 2s+1 give
    G^s mu2.  When G has certified infinite order the answer is exact:
    positive powers of G never hit a finite-order matrix, and the odd-length
    family reduces to finite-order residuals, checked directly.
    """
    for m in (mu1, mu2):
        if (m.nrows, m.ncols) != (2, 2):
            raise ValueError("alternating search is implemented for 2x2 matrices")
    targets = set(shift_targets(2))
    g = mu2 @ mu1

    def word(length: int) -> tuple[str, ...]:
        return tuple("mu2" if k % 2 == 0 else "mu1" for k in range(length))

    def check_up_to(s_max: int) -> SearchResult | None:
        power = RationalMatrix.identity(2)
        for s in range(s_max + 1):
            if s > 0 and power in targets:
                return SearchResult(
                    status="reached", word=word(2 * s), target=power,
                    depth_searched=2 * s,
                )
            odd = power @ mu2  # G^s mu2, an alternating word of odd length
            if odd in targets:
                return SearchResult(
                    status="reached", word=word(2 * s + 1), target=odd,
                    depth_searched=2 * s + 1,
                )
            power = power @ g
        return None

    order = matrix_order(g) if g.det() in (1, -1) else None
    if order is not None and order.kind == "finite":
        hit = check_up_to(order.order)
        if hit is not None:
            return hit
        return SearchResult(
            status="certified_never",
            reason=(
                f"the alternating product has finite order {order.order}; all "
                "distinct alternating words were checked exactly"
            ),
        )
    if order is not None and order.kind == "certified_infinite":
        hit = check_up_to(1)
        if hit is not None:
            return hit
        # even lengths: G^s with s >= 1 has infinite order while every negated
        # permutation has order 2.  Odd lengths: G^s mu2 = T forces
        # G^s = T mu2^{-1}; when every such residual has finite order (or
        # determinant other than +-1) this is impossible for s >= 1, and
        # s = 0, 1 were checked exactly above.
        residuals_finite = mu2.det() == 0 or all(
            (t @ mu2.inverse()).det() not in (1, -1)
            or matrix_order(t @ mu2.inverse()).kind == "finite"
            for t in targets
        )
        if residuals_finite:
            return SearchResult(
                status="certified_never",
                reason=(
                    "the alternating product of the two generators has "
                    "infinite order (certified exactly) while every target "
                    "and target residual has finite order, so no alternating "
                    "word beyond the lengths already checked can match"
                ),
            )
    hit = check_up_to(bound)
    if hit is not None:
        return hit
    return SearchResult(status="not_found", depth_searched=2 * bound + 1)


# -- quadratic growth along alternating rays ----------------------------------


def delta(c: RationalMatrix, v: Sequence) -> Fraction:
    """Value v^T C v of the symmetric form attached to C."""
    if not c.is_square:
        raise ValueError("delta requires a square matrix")
    w = c.vec_mul(v)
    return sum(Fraction(x) * y for x, y in zip(v, w))


@dataclass(frozen=True)
class DeltaSequence:
    vectors: tuple[tuple[int, int], ...]
    values: tuple[Fraction, ...]
    constant: bool

    def to_dict(self) -> dict:
        return {
            "vectors": [list(v) for v in self.vectors],
            "values": [str(x) for x in self.values],
            "constant": self.constant,
        }


def delta_sequence(m: int, l: int, terms: int) -> DeltaSequence:
    """Growth of the symmetric form [[2m, l], [l, 2]] along the alternating
    mutation ray: v_t = (a_{t+1}, -a_t) with a_1 = 0, a_2 = 1 and
    a_{t+1} = l*a_t - a_{t-1}.

    For m = 1 the sequence is constant; for m >= 2 and l >= 2 it grows
    (quadratically for l = 2, exponentially for l > 2).
    """
    if terms < 1:
        raise ValueError("need at least one term")
    if m < 1 or l < 1:
        raise ValueError("parameters must be >= 1")
    c = RationalMatrix([[2 * m, l], [l, 2]])
    a = [0, 0, 1]  # a_0 unused; a_1 = 0, a_2 = 1
    while len(a) < terms + 2:
        a.append(l * a[-1] - a[-2])
    vectors = tuple((a[t + 1], -a[t]) for t in range(1, terms + 1))
    values = tuple(delta(c, v) for v in vectors)
    return DeltaSequence(vectors, values, constant=len(set(values)) == 1)
