"""Command-line interface.

Deterministic JSON (sorted keys) or DOT on standard output.  Exit codes:
0 success, 1 domain error (singular Cartan matrix where invertibility is
required, leaf-edge mutation, unknown family, infinite-dimensional algebra),
2 malformed input.  ``-`` means standard input for any file argument; the
environment variable ``TILTKIT_DEPTH`` overrides the default search depth.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .analysis import NakayamaPermutation, analyze, selfinjective_coxeter_poly
from .brauer import (
    LeafEdgeError,
    decide,
    disconnectedness_certificate,
    kauer_move,
    mutation_g_matrix,
)
from .explore import (
    alternating_shift_search,
    delta_sequence,
    generate,
    reach_shift,
)
from .families import UnknownFamilyError, family, list_families
from .lattice import bounded_box, solutions
from .linalg import SingularCartanError, trivial_extension_cartan
from .matrix import RationalMatrix, SingularMatrixError
from .quiver import InfiniteDimensionalError
from .serialize import (
    MalformedInputError,
    frontier_to_dot,
    matrix_from_json,
    matrix_to_json,
    poly_to_json,
    presentation_to_json,
    quiver_to_dot,
    ribbon_from_json,
    ribbon_to_dot,
    ribbon_to_json,
)

DEFAULT_DEPTH = 12


class DomainError(ValueError):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path!r}: {exc}") from None


def _load_json(path: str):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON in {path!r}: {exc}") from None


def _default_depth() -> int:
    env = os.environ.get("TILTKIT_DEPTH")
    if env is None:
        return DEFAULT_DEPTH
    try:
        return int(env)
    except ValueError:
        raise MalformedInputError(
            f"TILTKIT_DEPTH must be an integer, got {env!r}"
        ) from None


def _family_params(args) -> dict:
    params = {}
    for key in ("m", "l", "n", "r"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def _cartan_from_args(args) -> tuple[RationalMatrix, RationalMatrix | None]:
    """Cartan matrix from --cartan JSON or the --family shortcut; the second
    component is a registry-supplied Coxeter matrix when one exists."""
    if getattr(args, "family", None):
        entry = family(args.family, **_family_params(args))
        return entry.cartan, entry.coxeter_override
    if getattr(args, "cartan", None):
        return matrix_from_json(_load_json(args.cartan)), None
    raise MalformedInputError("need --cartan FILE or --family NAME")


# -- subcommands ----------------------------------------------------------------


def _cmd_analyze(args) -> int:
    cartan, registry_coxeter = _cartan_from_args(args)
    override = registry_coxeter
    if args.coxeter:
        override = matrix_from_json(_load_json(args.coxeter))
    report = analyze(cartan, coxeter_override=override)
    out = report.to_dict()
    out["cartan"] = matrix_to_json(cartan)
    out["criteria"] = {
        "symmetrized_definiteness": "sign class of the symmetrized Cartan form",
        "cyclotomic_type": "all Coxeter eigenvalues on the unit circle",
        "has_eigenvalue_one": "(x - 1) divides the Coxeter polynomial",
    }
    _emit(out)
    return 0


def _cmd_family(args) -> int:
    if args.list:
        _emit(
            [
                {
                    "name": e.name,
                    "params": e.params,
                    "cartan": matrix_to_json(e.cartan),
                    "note": e.note,
                }
                for e in list_families()
            ]
        )
        return 0
    if not args.name:
        raise MalformedInputError("need --name NAME or --list")
    entry = family(args.name, **_family_params(args))
    if args.dot:
        if entry.presentation is None:
            raise DomainError(
                f"family {entry.name!r} has no quiver presentation to draw"
            )
        sys.stdout.write(quiver_to_dot(entry.presentation))
        return 0
    if args.full:
        out = {
            "name": entry.name,
            "params": entry.params,
            "cartan": matrix_to_json(entry.cartan),
            "note": entry.note,
            "presentation": (
                presentation_to_json(entry.presentation)
                if entry.presentation is not None
                else None
            ),
        }
        _emit(out)
        return 0
    # bare matrix JSON so the output pipes straight into `analyze --cartan -`
    _emit(matrix_to_json(entry.cartan))
    return 0


def _cmd_te(args) -> int:
    cartan, _ = _cartan_from_args(args)
    _emit(matrix_to_json(trivial_extension_cartan(cartan)))
    return 0


def _cmd_selfinjective(args) -> int:
    data = json.loads(args.cycles) if args.cycles else None
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise MalformedInputError(
            "--cycles must be a JSON list of cycles, e.g. [[1,2],[3]]"
        )
    try:
        sigma = NakayamaPermutation(
            tuple(tuple(int(x) for x in cyc) for cyc in data)
        )
    except (ValueError, TypeError) as exc:
        raise MalformedInputError(str(exc)) from None
    poly, has_one = selfinjective_coxeter_poly(sigma)
    _emit(
        {
            "coxeter_poly": poly_to_json(poly),
            "has_eigenvalue_one": has_one,
            "permutation_odd": sigma.is_odd,
        }
    )
    return 0


def _cmd_brauer(args) -> int:
    graph = ribbon_from_json(_load_json(args.graph))
    if args.action == "decide":
        out = decide(graph).to_dict()
        out["criteria"] = {
            "tilting_discrete": "no cycle, or a unique cycle of odd length",
            "k0_has_free_part": "edge/vertex count test on the stable "
            "Grothendieck group",
        }
        _emit(out)
        return 0
    if args.action == "mutate":
        if not args.edge:
            raise MalformedInputError("brauer mutate needs --edge ID")
        _emit(matrix_to_json(mutation_g_matrix(graph, args.edge)))
        return 0
    if args.action == "kauer":
        if not args.edge:
            raise MalformedInputError("brauer kauer needs --edge ID")
        _emit(ribbon_to_json(kauer_move(graph, args.edge)))
        return 0
    if args.action == "certify":
        _emit(disconnectedness_certificate(graph).to_dict())
        return 0
    if args.action == "dot":
        sys.stdout.write(ribbon_to_dot(graph))
        return 0
    raise MalformedInputError(f"unknown brauer action {args.action!r}")


def _load_generators(path: str) -> dict[str, RationalMatrix]:
    data = _load_json(path)
    if not isinstance(data, dict) or not data:
        raise MalformedInputError(
            "generators JSON must be a non-empty object name -> matrix"
        )
    return {str(k): matrix_from_json(v) for k, v in data.items()}


def _cmd_explore(args) -> int:
    if args.action == "reach-shift":
        if not args.gens:
            raise MalformedInputError("explore reach-shift needs --gens FILE")
        gens = _load_generators(args.gens)
        depth = args.depth if args.depth is not None else _default_depth()
        _emit(reach_shift(gens, depth).to_dict())
        return 0
    if args.action == "alternating":
        if args.m is None:
            raise MalformedInputError("explore alternating needs --m")
        if args.m < 1:
            raise DomainError("--m must be >= 1")
        mu1 = RationalMatrix([[-1, 0], [args.m, 1]])
        mu2 = RationalMatrix([[1, 1], [0, -1]])
        result = alternating_shift_search(mu1, mu2, bound=args.bound)
        out = result.to_dict()
        out["mu1"] = matrix_to_json(mu1)
        out["mu2"] = matrix_to_json(mu2)
        _emit(out)
        return 0
    if args.action == "delta":
        if args.m is None or args.l is None:
            raise MalformedInputError("explore delta needs --m and --l")
        seq = delta_sequence(args.m, args.l, args.t)
        _emit(seq.to_dict())
        return 0
    if args.action == "frontier":
        if not args.gens:
            raise MalformedInputError("explore frontier needs --gens FILE")
        gens = _load_generators(args.gens)
        depth = args.depth if args.depth is not None else _default_depth()
        sys.stdout.write(frontier_to_dot(generate(gens, depth)))
        return 0
    raise MalformedInputError(f"unknown explore action {args.action!r}")


def _cmd_lattice(args) -> int:
    cartan, _ = _cartan_from_args(args)
    try:
        z = Fraction(args.z)
    except (ValueError, ZeroDivisionError):
        raise MalformedInputError(f"bad --z value {args.z!r}") from None
    if args.radius is not None:
        vectors = bounded_box(cartan, z, args.radius)
        complete = False
    else:
        try:
            vectors = solutions(cartan, z)
        except ValueError as exc:
            raise DomainError(
                f"{exc}; use --radius for a bounded brute-force search"
            ) from None
        complete = True
    _emit(
        {
            "z": str(z),
            "complete": complete,
            "count": len(vectors),
            "vectors": [list(v) for v in vectors],
        }
    )
    return 0


# -- argument parsing -------------------------------------------------------------


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="registry family name instead of --cartan")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tiltkit",
        description="Exact Cartan/Coxeter analysis, Brauer graph mutation, "
        "g-matrix exploration, and quadratic-form lattice enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full Cartan/Coxeter report")
    p.add_argument("--cartan", help="matrix JSON file, or - for stdin")
    p.add_argument("--coxeter", help="optional Coxeter matrix JSON (singular Cartan)")
    _add_family_flags(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("family", help="algebra family registry")
    p.add_argument("--name", help="family name")
    p.add_argument("--list", action="store_true", help="print the whole registry")
    p.add_argument("--full", action="store_true", help="full entry, not just the Cartan")
    p.add_argument("--dot", action="store_true", help="DOT of the quiver presentation")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("te", help="trivial extension Cartan matrix C + C^T")
    p.add_argument("--cartan", help="matrix JSON file, or - for stdin")
    _add_family_flags(p)
    p.set_defaults(func=_cmd_te)

    p = sub.add_parser(
        "selfinjective", help="Coxeter polynomial from a Nakayama permutation"
    )
    p.add_argument("--cycles", required=True, help='JSON cycles, e.g. "[[1,2],[3]]"')
    p.set_defaults(func=_cmd_selfinjective)

    p = sub.add_parser("brauer", help="Brauer graph operations")
    p.add_argument("action", choices=["decide", "mutate", "kauer", "certify", "dot"])
    p.add_argument("--graph", required=True, help="ribbon graph JSON, or -")
    p.add_argument("--edge", help="edge id for mutate/kauer")
    p.set_defaults(func=_cmd_brauer)

    p = sub.add_parser("explore", help="g-matrix group exploration")
    p.add_argument(
        "action", choices=["reach-shift", "alternating", "delta", "frontier"]
    )
    p.add_argument("--gens", help="generators JSON: {name: matrix, ...}")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--t", type=int, default=20, help="number of delta terms")
    p.add_argument("--bound", type=int, default=100)
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("lattice", help="integer solutions of v^T C v = z")
    p.add_argument("--cartan", help="matrix JSON file, or - for stdin")
    p.add_argument("--z", required=True, help="target value (rational)")
    p.add_argument("--radius", type=int, default=None, help="bounded box search")
    _add_family_flags(p)
    p.set_defaults(func=_cmd_lattice)

    return parser


_DOMAIN_ERRORS = (
    DomainError,
    SingularCartanError,
    SingularMatrixError,
    LeafEdgeError,
    UnknownFamilyError,
    InfiniteDimensionalError,
)


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        _emit({"error": {"kind": "malformed_input", "message": str(exc)}})
        return 2
    except _DOMAIN_ERRORS as exc:
        _emit({"error": {"kind": "domain", "message": str(exc)}})
        return 1
    except (KeyError, ValueError) as exc:
        _emit({"error": {"kind": "domain", "message": str(exc)}})
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
