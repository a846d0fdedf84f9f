"""Cell collections, subdivision validation, and face-type systems.

A collection of spanning trees of K_{n,d} encodes a fine mixed subdivision
of n * Delta_{d-1} exactly when three conditions hold: every cell is a
spanning tree, every facet of every cell is either on the boundary or shared
with another cell, and no pair of cells overlaps (detected as a directed
cycle in the union graph with one tree oriented left-to-right and the other
right-to-left).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import networkx as nx

from .types import (
    DegreeVector,
    TooLargeError,
    TropicalType,
    dual,
    is_spanning_tree,
    left_degree_vector,
    mask_elements,
    right_degree_vector,
)


class InvalidSubdivisionError(ValueError):
    """The cell collection failed validation; carries the report."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("cell collection is not a fine mixed subdivision")


@dataclass(frozen=True)
class CellCollection:
    """An ordered set of types claimed to be the cells of a subdivision.

    Duplicates and shape mismatches are rejected at construction; whether the
    cells are actual spanning trees covering the simplex is precisely what
    ``validate_subdivision`` decides, so it is not enforced here.
    """

    n: int
    d: int
    cells: tuple[TropicalType, ...]

    def __post_init__(self):
        if not isinstance(self.cells, tuple):
            object.__setattr__(self, "cells", tuple(self.cells))
        for c in self.cells:
            if (c.n, c.d) != (self.n, self.d):
                raise ValueError(
                    f"cell {c!r} has shape ({c.n},{c.d}), expected ({self.n},{self.d})"
                )
        if len(set(self.cells)) != len(self.cells):
            raise ValueError("duplicate cells")

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[TropicalType]:
        return iter(self.cells)


@dataclass(frozen=True)
class ValidationReport:
    """Three condition verdicts with violation witnesses.

    tree_violations: (cell index, reason string)
    facet_violations: (cell index, edge (i,j), facet type or None)
        the facet is None when removing the edge would empty a coordinate
    cycle_violations: (cell index a, cell index b, vertex cycle)
        cycle vertices are ("L", i) / ("R", j) labels, closure implied
    """

    tree_violations: tuple[tuple[int, str], ...]
    facet_violations: tuple[tuple[int, tuple[int, int], TropicalType | None], ...]
    cycle_violations: tuple[tuple[int, int, tuple], ...]

    @property
    def trees_ok(self) -> bool:
        return not self.tree_violations

    @property
    def facets_ok(self) -> bool:
        return not self.facet_violations

    @property
    def overlaps_ok(self) -> bool:
        return not self.cycle_violations

    @property
    def ok(self) -> bool:
        return self.trees_ok and self.facets_ok and self.overlaps_ok


def _contains(big: TropicalType, small: TropicalType) -> bool:
    return all(s & ~b == 0 for b, s in zip(big.masks, small.masks))


def _union_cycle(T: TropicalType, U: TropicalType) -> tuple | None:
    """A directed cycle through >= 2 vertices per side in the union graph.

    Edges of T run left to right, edges of U right to left.  A shared edge
    contributes both orientations, so the union always has 2-cycles on shared
    support; those are not overlaps.  The genuine obstruction is an
    elementary cycle on at least 3 vertices (hence >= 4 in a bipartite graph).
    """
    g = nx.DiGraph()
    for i, j in T.edges():
        g.add_edge(("L", i), ("R", j))
    for i, j in U.edges():
        g.add_edge(("R", j), ("L", i))
    for cyc in nx.simple_cycles(g):
        if len(cyc) >= 3:
            return tuple(cyc)
    return None


@lru_cache(maxsize=None)
def validate_subdivision(C: CellCollection) -> ValidationReport:
    """Check the three subdivision conditions; violations are data, not errors."""
    tree_violations = []
    for ci, cell in enumerate(C.cells):
        if cell.edge_count != C.n + C.d - 1:
            tree_violations.append(
                (ci, f"edge count {cell.edge_count} != {C.n + C.d - 1}")
            )
        elif not is_spanning_tree(cell):
            tree_violations.append((ci, "not a spanning tree"))

    facet_violations = []
    for ci, cell in enumerate(C.cells):
        coverage = [0] * C.d
        for m in cell.masks:
            for j in mask_elements(m):
                coverage[j - 1] += 1
        for i, j in cell.edges():
            remaining = cell.masks[i - 1] & ~(1 << (j - 1))
            if remaining == 0:
                continue  # left vertex i would be isolated: boundary facet
            if coverage[j - 1] == 1:
                continue  # right vertex j would be isolated: boundary facet
            facet = cell.with_mask(i, remaining)
            if not any(
                cj != ci and _contains(other, facet)
                for cj, other in enumerate(C.cells)
            ):
                facet_violations.append((ci, (i, j), facet))

    cycle_violations = []
    for (ci, a), (cj, b) in itertools.combinations(enumerate(C.cells), 2):
        cyc = _union_cycle(a, b)
        if cyc is not None:
            cycle_violations.append((ci, cj, cyc))

    return ValidationReport(
        tuple(tree_violations), tuple(facet_violations), tuple(cycle_violations)
    )


def transpose(C: CellCollection) -> CellCollection:
    """Dual of every cell; swaps the (n, d) parameters."""
    return CellCollection(C.d, C.n, tuple(dual(c) for c in C.cells))


# ---------------------------------------------------------------------------
# Face-type systems


@dataclass(frozen=True)
class TypeSystem:
    """A deduplicated set of types, usually the faces of a subdivision.

    ``provenance`` maps each type to the index of one cell it arises from;
    ad-hoc systems built with ``from_types`` leave it empty.
    """

    n: int
    d: int
    types: frozenset[TropicalType]
    provenance: dict[TropicalType, int] = field(
        default_factory=dict, compare=False, repr=False
    )

    @classmethod
    def from_types(
        cls, types: Iterable[TropicalType], n: int | None = None, d: int | None = None
    ) -> "TypeSystem":
        ts = frozenset(types)
        if ts:
            some = next(iter(ts))
            n = some.n if n is None else n
            d = some.d if d is None else d
        if n is None or d is None:
            raise ValueError("empty system needs explicit n and d")
        for t in ts:
            if (t.n, t.d) != (n, d):
                raise ValueError(f"type {t!r} has shape ({t.n},{t.d}), expected ({n},{d})")
        return cls(n, d, ts)

    @cached_property
    def mask_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(t.masks for t in self.types)

    def __contains__(self, t: TropicalType) -> bool:
        return t in self.types

    def __iter__(self) -> Iterator[TropicalType]:
        return iter(sorted(self.types, key=TropicalType.sort_key))

    def __len__(self) -> int:
        return len(self.types)

    def without(self, t: TropicalType) -> "TypeSystem":
        return TypeSystem(self.n, self.d, self.types - {t})


def _nonempty_submasks(m: int) -> list[int]:
    subs = []
    sub = m
    while sub:
        subs.append(sub)
        sub = (sub - 1) & m
    return subs


def face_types(C: CellCollection) -> TypeSystem:
    """Every coordinatewise nonempty-subset choice of every cell, deduplicated.

    Cells are trees, so all such choices are forests and genuine faces.
    """
    report = validate_subdivision(C)
    if not report.ok:
        raise InvalidSubdivisionError(report)
    provenance: dict[TropicalType, int] = {}
    for ci, cell in enumerate(C.cells):
        choices = [_nonempty_submasks(m) for m in cell.masks]
        for combo in itertools.product(*choices):
            t = TropicalType(C.d, combo)
            provenance.setdefault(t, ci)
    return TypeSystem(C.n, C.d, frozenset(provenance), provenance)


def topes(S: TypeSystem) -> frozenset[TropicalType]:
    """The all-singleton types: 0-dimensional faces."""
    return frozenset(t for t in S.types if t.is_tope)


# ---------------------------------------------------------------------------
# Degree-vector bijection


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        comp = []
        for b in (*bars, total + parts - 1):
            comp.append(b - prev - 1)
            prev = b
        yield tuple(comp)


@dataclass(frozen=True)
class BijectionReport:
    """Whether LDV and RDV each biject cells onto their composition sets."""

    cell_count: int
    expected_count: int
    ldv_duplicates: tuple[tuple[int, ...], ...]
    ldv_missing: tuple[tuple[int, ...], ...]
    rdv_duplicates: tuple[tuple[int, ...], ...]
    rdv_missing: tuple[tuple[int, ...], ...]

    @property
    def ldv_ok(self) -> bool:
        return not self.ldv_duplicates and not self.ldv_missing

    @property
    def rdv_ok(self) -> bool:
        return not self.rdv_duplicates and not self.rdv_missing

    @property
    def ok(self) -> bool:
        return self.ldv_ok and self.rdv_ok and self.cell_count == self.expected_count


def _binomial(n: int, k: int) -> int:
    import math

    return math.comb(n, k)


def ldv_bijection_check(C: CellCollection) -> BijectionReport:
    """LDV must hit each weak composition of d-1 into n parts exactly once,
    and RDV each weak composition of n-1 into d parts."""
    report = validate_subdivision(C)
    if not report.ok:
        raise InvalidSubdivisionError(report)

    def check(images: list[tuple[int, ...]], total: int, parts: int):
        seen: dict[tuple[int, ...], int] = {}
        for img in images:
            seen[img] = seen.get(img, 0) + 1
        dupes = tuple(sorted(img for img, k in seen.items() if k > 1))
        missing = tuple(
            comp for comp in weak_compositions(total, parts) if comp not in seen
        )
        return dupes, missing

    ldv_images = [left_degree_vector(c).entries for c in C.cells]
    rdv_images = [right_degree_vector(c).entries for c in C.cells]
    ldv_dup, ldv_miss = check(ldv_images, C.d - 1, C.n)
    rdv_dup, rdv_miss = check(rdv_images, C.n - 1, C.d)
    return BijectionReport(
        cell_count=len(C.cells),
        expected_count=_binomial(C.n + C.d - 2, C.d - 1),
        ldv_duplicates=ldv_dup,
        ldv_missing=ldv_miss,
        rdv_duplicates=rdv_dup,
        rdv_missing=rdv_miss,
    )


# ---------------------------------------------------------------------------
# Unit simplices


def cell_contains_point(cell: TropicalType, point) -> bool:
    """Exact membership of a point in the Minkowski sum of the cell's simplices.

    The point lies in Delta_{I_1} + ... + Delta_{I_n} exactly when the
    transportation problem with unit supplies on the I_i and demands p_k is
    feasible.  By max-flow/min-cut this reduces to the cut condition
    sum_{k in K} p_k <= #{i : I_i meets K} over all K, checked exhaustively
    (2^d subsets), with exact rational arithmetic throughout.
    """
    d = cell.d
    if d > 16:
        raise TooLargeError("containment oracle enumerates 2^d subsets; d > 16")
    p = [Fraction(x) for x in point]
    if len(p) != d:
        raise ValueError(f"point has {len(p)} coordinates, expected {d}")
    if any(x < 0 for x in p):
        return False
    if sum(p) != cell.n:
        return False
    for K in range(1, 1 << d):
        demand = sum(x for k, x in enumerate(p) if K & (1 << k))
        supply = sum(1 for m in cell.masks if m & K)
        if demand > supply:
            return False
    return True


def unit_simplex_locations(cell: TropicalType) -> tuple[tuple[int, ...], ...]:
    """Locations a (nonnegative, summing to n-1) whose unit simplex, with
    vertices a + e_j for every j, lies inside the cell."""
    n, d = cell.n, cell.d
    found = []
    for a in weak_compositions(n - 1, d):
        vertices = []
        for j in range(d):
            v = list(a)
            v[j] += 1
            vertices.append(v)
        if all(cell_contains_point(cell, v) for v in vertices):
            found.append(a)
    return tuple(found)


@dataclass(frozen=True)
class UnitSimplexReport:
    """Per cell: the locations found and the RDV they must equal."""

    results: tuple[tuple[int, tuple[int, ...], tuple[tuple[int, ...], ...]], ...]
    # entries: (cell index, rdv, found locations)

    @property
    def ok(self) -> bool:
        return all(locs == (rdv,) for _, rdv, locs in self.results)

    def failures(self):
        return [r for r in self.results if r[2] != (r[1],)]


def unit_simplex_check(C: CellCollection) -> UnitSimplexReport:
    """Each cell must contain exactly one unit simplex, located at its RDV."""
    report = validate_subdivision(C)
    if not report.ok:
        raise InvalidSubdivisionError(report)
    results = []
    for ci, cell in enumerate(C.cells):
        rdv = right_degree_vector(cell).entries
        locs = unit_simplex_locations(cell)
        results.append((ci, rdv, locs))
    return UnitSimplexReport(tuple(results))
