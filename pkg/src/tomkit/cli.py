"""Command-line front end.

Exit codes: 0 success (or a passing verdict), 1 failing verdict (invalid
subdivision, axioms violated), 2 unsuitable input (non-generic weights,
domain errors), 3 no strong path, 64 malformed input file.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .axioms import check_tom
from .formats import (
    FileFormatError,
    dump_subdivision,
    dump_types,
    parse_subdivision,
    parse_type_arg,
    parse_types,
    parse_weights,
)
from .generators import prism_triangulation, staircase
from .geometry import (
    NonGenericWeightsError,
    facet_matrix,
    is_interval_matrix_reorderable,
    is_totally_unimodular,
    point_type,
    regular_subdivision,
)
from .paths import NoStrongPathError, eliminate_via_path, q_alpha, q_alpha_connected, strong_path
from .plot import render_subdivision_svg
from .subdivision import (
    InvalidSubdivisionError,
    TypeSystem,
    face_types,
    transpose,
    unit_simplex_locations,
    validate_subdivision,
)
from .types import (
    TropicalType,
    delta,
    left_degree_vector,
    rank,
    right_degree_vector,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_system(text: str) -> TypeSystem:
    """A types file, or a subdivision file expanded to its face system."""
    obj = None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        pass
    if isinstance(obj, dict) and "cells" in obj and "types" not in obj:
        return face_types(parse_subdivision(text))
    return parse_types(text)


def _type_json(t: TropicalType):
    return t.as_lists()


def _cycle_json(cycle):
    return [list(v) if isinstance(v, tuple) else v for v in cycle]


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad {what}: {text!r}")


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_gen(args) -> int:
    if args.what == "staircase":
        print(dump_subdivision(staircase(args.n, args.d)))
    elif args.what == "prism":
        print(dump_subdivision(prism_triangulation(_int_list(args.perm, "--perm"))))
    else:
        W = parse_weights(_read(args.weights))
        print(dump_subdivision(regular_subdivision(W)))
    return 0


def _cmd_validate(args) -> int:
    C = parse_subdivision(_read(args.file))
    rep = validate_subdivision(C)
    if args.json:
        out = {
            "ok": rep.ok,
            "spanning_trees": {
                "ok": rep.trees_ok,
                "violations": [{"cell": c, "reason": r} for c, r in rep.tree_violations],
            },
            "facets": {
                "ok": rep.facets_ok,
                "violations": [
                    {
                        "cell": c,
                        "edge": list(e),
                        "facet": None if f is None else _type_json(f),
                    }
                    for c, e, f in rep.facet_violations
                ],
            },
            "overlaps": {
                "ok": rep.overlaps_ok,
                "violations": [
                    {"cells": [a, b], "cycle": _cycle_json(cyc)}
                    for a, b, cyc in rep.cycle_violations
                ],
            },
        }
        print(json.dumps(out))
    else:
        print(f"condition 1 (spanning trees): {'ok' if rep.trees_ok else 'VIOLATED'}")
        for c, r in rep.tree_violations:
            print(f"  cell {c + 1}: {r}")
        print(f"condition 2 (facet coverage): {'ok' if rep.facets_ok else 'VIOLATED'}")
        for c, e, f in rep.facet_violations:
            print(f"  cell {c + 1} edge {e}: facet {f.compact()} covered by no other cell")
        print(f"condition 3 (no pairwise overlap): {'ok' if rep.overlaps_ok else 'VIOLATED'}")
        for a, b, cyc in rep.cycle_violations:
            pretty = " -> ".join(f"{s}{i}" for s, i in cyc)
            print(f"  cells {a + 1},{b + 1}: cycle {pretty}")
        print(f"verdict: {'fine mixed subdivision' if rep.ok else 'not a subdivision'}")
    return 0 if rep.ok else 1


def _cmd_faces(args) -> int:
    C = parse_subdivision(_read(args.file))
    print(dump_types(face_types(C)))
    return 0


def _cmd_check_tom(args) -> int:
    S = _load_system(_read(args.file))
    verdict = check_tom(S)

    def violations_json(rep):
        if rep.axiom == "boundary":
            return [{"missing": j} for j in rep.violations]
        if rep.axiom == "surrounding":
            out = []
            for v in rep.violations:
                if len(v) == 3 and isinstance(v[1], int):
                    out.append({"type": _type_json(v[0]), "coordinate": v[1], "element": v[2]})
                else:
                    A, P, R = v
                    out.append(
                        {
                            "type": _type_json(A),
                            "partition": [sorted(b) for b in P.blocks],
                            "refinement": _type_json(R),
                        }
                    )
            return out
        if rep.axiom == "comparability":
            return [
                {"a": _type_json(a), "b": _type_json(b), "cycle": list(cyc)}
                for a, b, cyc in rep.violations
            ]
        return [
            {"a": _type_json(a), "b": _type_json(b), "j": j}
            for a, b, j in rep.violations
        ]

    if args.json:
        print(
            json.dumps(
                {
                    "ok": verdict.ok,
                    "axioms": {
                        rep.axiom: {"ok": rep.ok, "violations": violations_json(rep)}
                        for rep in verdict.reports
                    },
                }
            )
        )
    else:
        for rep in verdict.reports:
            status = "pass" if rep.ok else f"FAIL ({len(rep.violations)} violations)"
            print(f"{rep.axiom:14s} {status}")
            for v in rep.violations[:5]:
                print(f"  {v}")
            if len(rep.violations) > 5:
                print(f"  ... {len(rep.violations) - 5} more")
        print(
            "verdict: "
            + ("tropical oriented matroid" if verdict.ok else "not a tropical oriented matroid")
        )
    return 0 if verdict.ok else 1


def _cmd_degree(args) -> int:
    C = parse_subdivision(_read(args.file))
    if not 1 <= args.cell <= len(C.cells):
        raise ValueError(f"--cell {args.cell} outside 1..{len(C.cells)}")
    cell = C.cells[args.cell - 1]
    ldv = left_degree_vector(cell).entries
    rdv = right_degree_vector(cell).entries
    locs = unit_simplex_locations(cell)
    if args.json:
        print(
            json.dumps(
                {
                    "cell": args.cell,
                    "ldv": list(ldv),
                    "rdv": list(rdv),
                    "unit_simplex_locations": [list(a) for a in locs],
                }
            )
        )
    else:
        print(f"cell {args.cell}: {cell.compact()}")
        print(f"ldv: {ldv}")
        print(f"rdv: {rdv}")
        print(f"unit simplex locations: {list(locs)}")
    return 0


def _cmd_dual(args) -> int:
    C = parse_subdivision(_read(args.file))
    print(dump_subdivision(transpose(C)))
    return 0


def _cmd_rank(args) -> int:
    A, B, _ = _parse_pair(args)
    r = rank(A, B)
    print(json.dumps({"rank": list(r)}) if args.json else f"rank: {r}")
    return 0


def _cmd_delta(args) -> int:
    A, B, _ = _parse_pair(args)
    v = delta(A, B)
    print(json.dumps({"delta": v}) if args.json else f"delta: {v}")
    return 0


def _parse_pair(args):
    """Inline --a/--b types; d defaults to the largest element mentioned."""
    d = args.d
    if d is None:
        probe = json.loads(args.a) + json.loads(args.b)
        d = max(max(coord) for coord in probe if coord)
    A = parse_type_arg(args.a, d)
    B = parse_type_arg(args.b, d)
    return A, B, d


def _cmd_strong_path(args) -> int:
    S = _load_system(_read(args.file))
    A = parse_type_arg(args.a, S.d, S.n)
    B = parse_type_arg(args.b, S.d, S.n)
    path = strong_path(S, A, B)
    print(dump_types(S, order=list(path.steps)))
    return 0


def _cmd_eliminate(args) -> int:
    S = _load_system(_read(args.file))
    A = parse_type_arg(args.a, S.d, S.n)
    B = parse_type_arg(args.b, S.d, S.n)
    C = eliminate_via_path(S, A, B, args.j)
    print(dump_types(S, order=[C]))
    return 0


def _cmd_qalpha(args) -> int:
    S = _load_system(_read(args.file))
    alpha = tuple(_int_list(args.alpha, "--alpha"))
    if args.check_connected:
        rep = q_alpha_connected(S, alpha)
        if args.json:
            print(
                json.dumps(
                    {
                        "alpha": list(alpha),
                        "size": rep.size,
                        "connected": rep.connected,
                        "components": [
                            [_type_json(t) for t in sorted(c, key=TropicalType.sort_key)]
                            for c in rep.components
                        ],
                    }
                )
            )
        else:
            print(f"|Q_alpha| = {rep.size}, components = {len(rep.components)}")
            print(f"connected: {rep.connected}")
        return 0
    print(dump_types(q_alpha(S, alpha)))
    return 0


def _cmd_tu(args) -> int:
    C = parse_subdivision(_read(args.file))
    if not 1 <= args.cell <= len(C.cells):
        raise ValueError(f"--cell {args.cell} outside 1..{len(C.cells)}")
    fm = facet_matrix(C.cells[args.cell - 1])
    tu = is_totally_unimodular(fm)
    interval = is_interval_matrix_reorderable(fm)
    if args.json:
        print(
            json.dumps(
                {
                    "cell": args.cell,
                    "edges": [list(e) for e in fm.edges],
                    "rows": [list(r) for r in fm.rows],
                    "rhs": list(fm.rhs),
                    "totally_unimodular": tu,
                    "interval_reorderable": interval,
                }
            )
        )
    else:
        print(f"cell {args.cell}: {C.cells[args.cell - 1].compact()}")
        for e, row, c in zip(fm.edges, fm.rows, fm.rhs):
            print(f"  edge {e}: {' '.join(map(str, row))} = {c}")
        print(f"totally unimodular: {tu}")
        print(f"interval reorderable: {interval}")
    return 0


def _cmd_point_type(args) -> int:
    W = parse_weights(_read(args.weights))
    x = [v.strip() for v in args.x.split(",")]
    T = point_type(W, x)
    print(dump_types(TypeSystem(W.n, W.d, frozenset([T])), order=[T]))
    return 0


def _cmd_plot(args) -> int:
    C = parse_subdivision(_read(args.file))
    svg = render_subdivision_svg(C)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tomkit",
        description="Triangulations of products of simplices and tropical oriented matroids",
    )
    p.add_argument("--version", action="version", version=f"tomkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file_arg=True, json_flag=False):
        sp = sub.add_parser(name, help=help_)
        if file_arg:
            sp.add_argument("file", help="input file, or - for stdin")
        if json_flag:
            sp.add_argument("--json", action="store_true", help="machine-readable report")
        sp.set_defaults(func=func)
        return sp

    gen = sub.add_parser("gen", help="generate a subdivision file")
    gensub = gen.add_subparsers(dest="what", required=True)
    g1 = gensub.add_parser("staircase", help="staircase triangulation")
    g1.add_argument("--n", type=int, required=True)
    g1.add_argument("--d", type=int, required=True)
    g2 = gensub.add_parser("prism", help="prism triangulation from an ordering")
    g2.add_argument("--perm", required=True, help="e.g. 2,1,3")
    g3 = gensub.add_parser("regular", help="regular subdivision from weights")
    g3.add_argument("--weights", required=True, help="weight file, or - for stdin")
    gen.set_defaults(func=_cmd_gen)
    for gsub in (g1, g2, g3):
        gsub.set_defaults(func=_cmd_gen)

    add("validate", _cmd_validate, "check the three subdivision conditions", json_flag=True)
    add("faces", _cmd_faces, "emit the full face-type system")
    add("check-tom", _cmd_check_tom, "check the four axioms", json_flag=True)

    sp = add("degree", _cmd_degree, "LDV, RDV, and unit-simplex location of a cell", json_flag=True)
    sp.add_argument("--cell", type=int, required=True, help="1-based cell index")

    add("dual", _cmd_dual, "transpose every cell; swaps n and d")

    for name, func in (("rank", _cmd_rank), ("delta", _cmd_delta)):
        sp = sub.add_parser(name, help=f"{name} of two inline types")
        sp.add_argument("--a", required=True, help="type as JSON, e.g. [[1,2],[2]]")
        sp.add_argument("--b", required=True)
        sp.add_argument("--d", type=int, default=None, help="ambient d (default: inferred)")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)

    sp = add("strong-path", _cmd_strong_path, "strong path between two types of the system")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)

    sp = add("eliminate", _cmd_eliminate, "elimination witness via strong path")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--j", type=int, required=True, help="1-based position")

    sp = add("qalpha", _cmd_qalpha, "cardinality-filtered subsystem", json_flag=True)
    sp.add_argument("--alpha", required=True, help="e.g. 1,0,0")
    sp.add_argument("--check-connected", action="store_true")

    sp = add("tu", _cmd_tu, "facet matrix and total-unimodularity verdicts", json_flag=True)
    sp.add_argument("--cell", type=int, required=True, help="1-based cell index")

    sp = sub.add_parser("point-type", help="type of a point in a tropical arrangement")
    sp.add_argument("--weights", required=True, help="weight file, or - for stdin")
    sp.add_argument("--x", required=True, help="point, e.g. 0,1/2,0")
    sp.set_defaults(func=_cmd_point_type)

    sp = add("plot", _cmd_plot, "render an SVG of a subdivision of n*Delta_2")
    sp.add_argument("--out", required=True, help="output .svg path")

    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 64
    except NonGenericWeightsError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NoStrongPathError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except InvalidSubdivisionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
