"""JSON file formats for subdivisions, type systems, and weight matrices.

Subdivision file: {"n": int, "d": int, "cells": [[[int, ...], ...], ...]}
where cells[c][i] is the sorted 1-based element list of coordinate i+1 of
cell c.  Types files are identical with key "types".  Weight files carry
{"n": int, "d": int, "weights": [[str, ...], ...]} with entries written as
exact rationals, "p/q" or plain integer strings.

Parse errors raise FileFormatError with a position annotation: the JSON
line/column for syntax errors, a path like cells[2][0] for schema errors.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .geometry import WeightMatrix
from .subdivision import CellCollection, TypeSystem
from .types import TropicalType, ttype


class FileFormatError(ValueError):
    """Malformed input file; the message carries the position."""


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(f"line {e.lineno} column {e.colno}: {e.msg}") from e


def _require_int(obj, path: str, minimum: int = 1) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise FileFormatError(f"{path}: expected an integer, got {obj!r}")
    if obj < minimum:
        raise FileFormatError(f"{path}: must be >= {minimum}, got {obj}")
    return obj


def _parse_type(obj, n: int, d: int, path: str) -> TropicalType:
    if not isinstance(obj, list):
        raise FileFormatError(f"{path}: expected a list of coordinate lists")
    if len(obj) != n:
        raise FileFormatError(f"{path}: expected {n} coordinates, got {len(obj)}")
    coords = []
    for i, coord in enumerate(obj):
        cpath = f"{path}[{i}]"
        if not isinstance(coord, list) or not coord:
            raise FileFormatError(f"{cpath}: expected a nonempty list of elements")
        seen = set()
        for x in coord:
            if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= d:
                raise FileFormatError(f"{cpath}: element {x!r} outside 1..{d}")
            if x in seen:
                raise FileFormatError(f"{cpath}: duplicate element {x}")
            seen.add(x)
        coords.append(seen)
    return ttype(d, *coords)


def _parse_type_file(text: str, key: str) -> tuple[int, int, list[TropicalType]]:
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise FileFormatError("top level: expected an object")
    for field in ("n", "d", key):
        if field not in obj:
            raise FileFormatError(f"top level: missing key {field!r}")
    n = _require_int(obj["n"], "n")
    d = _require_int(obj["d"], "d")
    items = obj[key]
    if not isinstance(items, list):
        raise FileFormatError(f"{key}: expected a list")
    return n, d, [_parse_type(t, n, d, f"{key}[{c}]") for c, t in enumerate(items)]


def parse_subdivision(text: str) -> CellCollection:
    n, d, cells = _parse_type_file(text, "cells")
    try:
        return CellCollection(n, d, tuple(cells))
    except ValueError as e:
        raise FileFormatError(f"cells: {e}") from e


def parse_types(text: str) -> TypeSystem:
    n, d, types = _parse_type_file(text, "types")
    return TypeSystem(n, d, frozenset(types))


def parse_weights(text: str) -> WeightMatrix:
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise FileFormatError("top level: expected an object")
    for field in ("n", "d", "weights"):
        if field not in obj:
            raise FileFormatError(f"top level: missing key {field!r}")
    n = _require_int(obj["n"], "n")
    d = _require_int(obj["d"], "d")
    rows = obj["weights"]
    if not isinstance(rows, list) or len(rows) != n:
        raise FileFormatError(f"weights: expected {n} rows")
    parsed = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != d:
            raise FileFormatError(f"weights[{i}]: expected {d} entries")
        out = []
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise FileFormatError(
                    f"weights[{i}][{j}]: expected an integer or 'p/q' string"
                )
            try:
                out.append(Fraction(x))
            except (ValueError, ZeroDivisionError) as e:
                raise FileFormatError(f"weights[{i}][{j}]: {e}") from e
        parsed.append(tuple(out))
    return WeightMatrix(n, d, tuple(parsed))


def parse_type_arg(text: str, d: int, n: int | None = None) -> TropicalType:
    """A single inline type, e.g. '[[1,2],[2]]'."""
    obj = _loads(text)
    if not isinstance(obj, list):
        raise FileFormatError("type: expected a list of coordinate lists")
    length = len(obj) if n is None else n
    return _parse_type(obj, length, d, "type")


def dump_subdivision(C: CellCollection) -> str:
    return json.dumps(
        {"n": C.n, "d": C.d, "cells": [c.as_lists() for c in C.cells]}
    )


def dump_types(S: TypeSystem, order: list[TropicalType] | None = None) -> str:
    """Types are sorted unless an explicit order (e.g. a path) is given."""
    seq = list(S) if order is None else order
    return json.dumps({"n": S.n, "d": S.d, "types": [t.as_lists() for t in seq]})


def dump_weights(W: WeightMatrix) -> str:
    return json.dumps(
        {"n": W.n, "d": W.d, "weights": [[str(x) for x in row] for row in W.rows]}
    )
