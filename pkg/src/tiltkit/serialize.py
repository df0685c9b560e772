"""JSON and DOT serialization.

Matrix JSON: ``{"rows": n, "cols": m, "entries": [["p/q", ...], ...]}`` with
integer shorthand ``"5"`` permitted on input.  Polynomials are coefficient
arrays, constant term first.  Quivers and ribbon graphs use the documented
object schemas.  DOT output is deterministic; ribbon graphs annotate the
cyclic order through port numbers on the half-edges.
"""

from __future__ import annotations

from fractions import Fraction

from .brauer import RibbonEdge, RibbonGraph, RibbonVertex
from .explore import Frontier
from .matrix import RationalMatrix
from .poly import Polynomial
from .quiver import Arrow, MonomialPresentation, Quiver


class MalformedInputError(ValueError):
    """Input JSON does not match the expected schema."""


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise MalformedInputError(message)


# -- matrices -----------------------------------------------------------------


def matrix_to_json(m: RationalMatrix) -> dict:
    return {
        "rows": m.nrows,
        "cols": m.ncols,
        "entries": [[str(x) for x in row] for row in m.entries],
    }


def matrix_from_json(data) -> RationalMatrix:
    _expect(isinstance(data, dict), "matrix JSON must be an object")
    _expect("entries" in data, "matrix JSON needs an 'entries' field")
    entries = data["entries"]
    _expect(
        isinstance(entries, list) and entries and all(isinstance(r, list) for r in entries),
        "'entries' must be a non-empty list of rows",
    )
    rows = []
    for row in entries:
        out = []
        for x in row:
            _expect(isinstance(x, (str, int)), f"entry {x!r} must be a string or integer")
            try:
                out.append(Fraction(x))
            except (ValueError, ZeroDivisionError) as exc:
                raise MalformedInputError(f"bad rational {x!r}: {exc}") from None
        rows.append(out)
    m = RationalMatrix(rows)
    if "rows" in data:
        _expect(data["rows"] == m.nrows, "'rows' disagrees with the entry grid")
    if "cols" in data:
        _expect(data["cols"] == m.ncols, "'cols' disagrees with the entry grid")
    return m


def poly_to_json(p: Polynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def poly_from_json(data) -> Polynomial:
    _expect(isinstance(data, list), "polynomial JSON must be a coefficient array")
    try:
        return Polynomial([Fraction(c) for c in data])
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"bad coefficient array: {exc}") from None


# -- quivers ------------------------------------------------------------------


def presentation_to_json(pres: MonomialPresentation) -> dict:
    return {
        "vertices": pres.quiver.vertices,
        "arrows": [
            {"id": a.id, "from": a.source, "to": a.target}
            for a in pres.quiver.arrows
        ],
        "zero_relations": [list(rel) for rel in pres.zero_relations],
    }


def presentation_from_json(data) -> MonomialPresentation:
    _expect(isinstance(data, dict), "quiver JSON must be an object")
    for key in ("vertices", "arrows"):
        _expect(key in data, f"quiver JSON needs a {key!r} field")
    _expect(
        isinstance(data["vertices"], int) and data["vertices"] >= 1,
        "'vertices' must be a positive integer",
    )
    arrows = []
    for a in data["arrows"]:
        _expect(
            isinstance(a, dict) and {"id", "from", "to"} <= set(a),
            "each arrow needs 'id', 'from', 'to'",
        )
        arrows.append(Arrow(str(a["id"]), int(a["from"]), int(a["to"])))
    relations = tuple(
        tuple(str(x) for x in rel) for rel in data.get("zero_relations", [])
    )
    try:
        return MonomialPresentation(Quiver(data["vertices"], tuple(arrows)), relations)
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from None


# -- ribbon graphs ------------------------------------------------------------


def ribbon_to_json(g: RibbonGraph) -> dict:
    return {
        "vertices": [
            {"id": v.id, "mult": v.multiplicity, "order": list(v.order)}
            for v in g.vertices
        ],
        "edges": [{"id": e.id, "halves": list(e.halves)} for e in g.edges],
    }


def ribbon_from_json(data) -> RibbonGraph:
    _expect(isinstance(data, dict), "ribbon graph JSON must be an object")
    for key in ("vertices", "edges"):
        _expect(key in data, f"ribbon graph JSON needs a {key!r} field")
    vertices = []
    for v in data["vertices"]:
        _expect(
            isinstance(v, dict) and {"id", "order"} <= set(v),
            "each vertex needs 'id' and 'order'",
        )
        vertices.append(
            RibbonVertex(
                str(v["id"]),
                int(v.get("mult", 1)),
                tuple(str(h) for h in v["order"]),
            )
        )
    edges = []
    for e in data["edges"]:
        _expect(
            isinstance(e, dict) and {"id", "halves"} <= set(e),
            "each edge needs 'id' and 'halves'",
        )
        halves = [str(h) for h in e["halves"]]
        _expect(len(halves) == 2, "each edge has exactly two halves")
        edges.append(RibbonEdge(str(e["id"]), (halves[0], halves[1])))
    try:
        return RibbonGraph(tuple(vertices), tuple(edges))
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from None


# -- DOT ------------------------------------------------------------------------


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def quiver_to_dot(pres: MonomialPresentation) -> str:
    lines = ["digraph quiver {"]
    for v in range(1, pres.quiver.vertices + 1):
        lines.append(f"  {v};")
    for a in pres.quiver.arrows:
        lines.append(f"  {a.source} -> {a.target} [label={_quote(a.id)}];")
    for rel in pres.zero_relations:
        lines.append(f"  // zero relation: {' '.join(rel)}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ribbon_to_dot(g: RibbonGraph) -> str:
    # port numbers record the cyclic order of half-edges at each vertex
    port = {
        h: (v.id, k) for v in g.vertices for k, h in enumerate(v.order)
    }
    lines = ["graph ribbon {"]
    for v in g.vertices:
        label = f"{v.id} (m={v.multiplicity})"
        lines.append(f"  {_quote(v.id)} [label={_quote(label)}];")
    for e in g.edges:
        (va, ka), (vb, kb) = port[e.halves[0]], port[e.halves[1]]
        label = f"{e.id}: {ka}-{kb}"
        lines.append(f"  {_quote(va)} -- {_quote(vb)} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def frontier_to_dot(frontier: Frontier) -> str:
    lines = ["digraph frontier {"]
    for i, node in enumerate(frontier.nodes):
        word = " ".join(node.word) if node.word else "e"
        lines.append(f"  n{i} [label={_quote(word)}];")
    for src, gen, dst in frontier.edges:
        lines.append(f"  n{src} -> n{dst} [label={_quote(gen)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
