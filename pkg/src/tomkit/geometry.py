"""Exact-arithmetic geometry behind the combinatorics.

Everything here is exact: weights and points are rationals, determinants are
integers, and no comparison ever involves a tolerance.  The max-plus
convention is used throughout: a tropical hyperplane with apex coefficients
(w_1, ..., w_d) is the locus where max_j (w_j + x_j) is attained twice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import networkx as nx

from .subdivision import CellCollection
from .types import (
    MAX_D,
    TooLargeError,
    TropicalType,
    is_spanning_tree,
    mask_elements,
)


class NotSpanningTreeError(ValueError):
    """The operation needs a spanning tree of K_{n,d}."""


class NonGenericWeightsError(ValueError):
    """Some supporting functional touches a vertex outside its tree: the
    induced subdivision is not a triangulation."""

    def __init__(self, tree: TropicalType, edge: tuple[int, int]):
        self.tree = tree
        self.edge = edge
        super().__init__(
            f"weights are not generic: tree {tree!r} ties on edge {edge}"
        )


@dataclass(frozen=True)
class WeightMatrix:
    """An n x d matrix of exact rationals: lifting heights, or equivalently
    the apex coefficients of n tropical hyperplanes."""

    n: int
    d: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 1 or not 1 <= self.d <= MAX_D:
            raise ValueError(f"bad shape ({self.n}, {self.d})")
        if len(self.rows) != self.n or any(len(r) != self.d for r in self.rows):
            raise ValueError("rows do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "WeightMatrix":
        converted = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not converted:
            raise ValueError("weight matrix needs at least one row")
        return cls(len(converted), len(converted[0]), converted)


# ---------------------------------------------------------------------------
# Facet matrices of fine cells


@dataclass(frozen=True)
class FacetMatrix:
    """0/1 facet normals of one fine cell, projected to the plane x_d = 0.

    Row e is the indicator, over columns 1..d-1, of the right vertices cut
    off from vertex d when edge e is removed from the cell tree; the facet
    equation is sum of those coordinates = rhs.  Edges whose left endpoint is
    a leaf define no facet and contribute no row.
    """

    d: int
    rows: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def supports(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(j + 1 for j, x in enumerate(row) if x) for row in self.rows
        )


def facet_matrix(T: TropicalType) -> FacetMatrix:
    """One row per facet-defining edge of a spanning-tree cell."""
    if not is_spanning_tree(T):
        raise NotSpanningTreeError(f"{T!r} is not a spanning tree")
    n, d = T.n, T.d
    all_edges = list(T.edges())
    adjacency: dict[tuple[str, int], list[tuple[str, int]]] = {}
    rows, rhs, kept = [], [], []
    for e in all_edges:
        if T.masks[e[0] - 1].bit_count() == 1:
            continue  # left leaf: removing it kills the summand, not a facet
        # BFS from right vertex d in T minus e
        adjacency.clear()
        for f in all_edges:
            if f == e:
                continue
            L, R = ("L", f[0]), ("R", f[1])
            adjacency.setdefault(L, []).append(R)
            adjacency.setdefault(R, []).append(L)
        reached = {("R", d)}
        stack = [("R", d)]
        while stack:
            for nxt in adjacency.get(stack.pop(), ()):
                if nxt not in reached:
                    reached.add(nxt)
                    stack.append(nxt)
        cut_right = [j for j in range(1, d) if ("R", j) not in reached]
        cut_left = sum(1 for i in range(1, n + 1) if ("L", i) not in reached)
        rows.append(tuple(1 if j in cut_right else 0 for j in range(1, d)))
        rhs.append(cut_left)
        kept.append(e)
    return FacetMatrix(d, tuple(rows), tuple(rhs), tuple(kept))


# ---------------------------------------------------------------------------
# Total unimodularity


def _int_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    k = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for r in range(i + 1, k):
                if m[r][i]:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[-1][-1]


def _as_01_matrix(M) -> list[list[int]]:
    rows = [list(r) for r in (M.rows if isinstance(M, FacetMatrix) else M)]
    for r in rows:
        for x in r:
            if x not in (0, 1):
                raise ValueError(f"entry {x!r} is not 0/1")
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def is_totally_unimodular(M) -> bool:
    """Every square submatrix has determinant in {-1, 0, 1}, by brute force."""
    rows = _as_01_matrix(M)
    if not rows or not rows[0]:
        return True
    nr, nc = len(rows), len(rows[0])
    if nr > 12 or nc > 12:
        raise TooLargeError("brute-force TU check capped at 12 x 12")
    for k in range(2, min(nr, nc) + 1):  # 1x1 minors are the 0/1 entries
        for rsel in itertools.combinations(range(nr), k):
            for csel in itertools.combinations(range(nc), k):
                sub = [[rows[r][c] for c in csel] for r in rsel]
                if abs(_int_det(sub)) > 1:
                    return False
    return True


def _laminar_order(supports: list[int], nc: int) -> list[int] | None:
    """Column order making laminar supports consecutive, or None.

    Supports must be pairwise nested or disjoint; children of each support
    are then packed contiguously inside it, loose columns appended after.
    """
    uniq = sorted(set(supports), key=lambda m: (-m.bit_count(), m))
    for a, b in itertools.combinations(uniq, 2):
        inter = a & b
        if inter and inter != a and inter != b:
            return None
    full = (1 << nc) - 1
    children: dict[int, list[int]] = {full: []}
    for m in uniq:
        if m == full:
            continue
        parent = full
        for other in uniq:  # smallest strict superset, if any
            if other != m and m & other == m:
                if other & parent == other:
                    parent = other
        children.setdefault(parent, []).append(m)
        children.setdefault(m, [])

    order: list[int] = []

    def emit(node: int):
        covered = 0
        for child in sorted(children[node]):
            emit(child)
            covered |= child
        for j in mask_elements(node & ~covered):
            order.append(j - 1)

    emit(full)
    return order


def is_interval_matrix_reorderable(M) -> bool:
    """Can some column permutation make every row's 1s consecutive?

    Laminar support families admit a direct construction; otherwise fall back
    to permutation search, guarded at 10 columns.
    """
    rows = _as_01_matrix(M)
    if not rows or not rows[0]:
        return True
    nc = len(rows[0])
    masks = [sum(1 << c for c, x in enumerate(r) if x) for r in rows]

    def consecutive(order: Sequence[int]) -> bool:
        pos = {c: p for p, c in enumerate(order)}
        for m in masks:
            ps = [pos[c] for c in range(nc) if m & (1 << c)]
            if ps and max(ps) - min(ps) + 1 != len(ps):
                return False
        return True

    order = _laminar_order(masks, nc)
    if order is not None:
        if not consecutive(order):
            raise AssertionError("laminar ordering failed to be consecutive")
        return True
    if nc > 10:
        raise TooLargeError("permutation search capped at 10 columns")
    return any(consecutive(perm) for perm in itertools.permutations(range(nc)))


# ---------------------------------------------------------------------------
# Tropical hyperplane arrangements


def point_type(W: WeightMatrix, x: Sequence) -> TropicalType:
    """Per hyperplane, the set of coordinates attaining max_j (w_ij + x_j)."""
    xs = [Fraction(v) for v in x]
    if len(xs) != W.d:
        raise ValueError(f"point has {len(xs)} coordinates, expected {W.d}")
    masks = []
    for row in W.rows:
        vals = [w + v for w, v in zip(row, xs)]
        top = max(vals)
        masks.append(sum(1 << j for j, v in enumerate(vals) if v == top))
    return TropicalType(W.d, tuple(masks))


@lru_cache(maxsize=None)
def spanning_trees(n: int, d: int) -> tuple[TropicalType, ...]:
    """All spanning trees of K_{n,d} as types (there are n^(d-1) * d^(n-1))."""
    g = nx.complete_bipartite_graph(n, d)  # nodes 0..n-1 left, n..n+d-1 right
    out = []
    for tree in nx.SpanningTreeIterator(g):
        masks = [0] * n
        for u, v in tree.edges():
            if u > v:
                u, v = v, u
            masks[u] |= 1 << (v - n)
        out.append(TropicalType(d, tuple(masks)))
    return tuple(sorted(out, key=TropicalType.sort_key))


def regular_subdivision(W: WeightMatrix) -> CellCollection:
    """Cells of the regular subdivision induced by the weights.

    A spanning tree is a cell exactly when the potentials y_i + z_j = w_ij,
    solved along tree edges with the gauge z_d = 0, dominate the weights off
    the tree: y_i + z_j > w_ij for every non-tree edge.  Equality on a
    non-tree edge means the supporting functional touches an extra vertex,
    so the weights are not generic and no triangulation is induced.
    """
    n, d = W.n, W.d
    cells = []
    for T in spanning_trees(n, d):
        y: list[Fraction | None] = [None] * n
        z: list[Fraction | None] = [None] * d
        z[d - 1] = Fraction(0)
        neighbors_l = [mask_elements(m) for m in T.masks]
        neighbors_r: list[list[int]] = [[] for _ in range(d)]
        for i, js in enumerate(neighbors_l):
            for j in js:
                neighbors_r[j - 1].append(i)
        stack = [("R", d - 1)]
        while stack:
            side, idx = stack.pop()
            if side == "R":
                for i in neighbors_r[idx]:
                    if y[i] is None:
                        y[i] = W.rows[i][idx] - z[idx]
                        stack.append(("L", i))
            else:
                for j in neighbors_l[idx]:
                    if z[j - 1] is None:
                        z[j - 1] = W.rows[idx][j - 1] - y[idx]
                        stack.append(("R", j - 1))
        tie: tuple[int, int] | None = None
        ok = True
        for i in range(n):
            m = T.masks[i]
            for j in range(d):
                if m & (1 << j):
                    continue
                r = y[i] + z[j] - W.rows[i][j]
                if r < 0:
                    ok = False
                    break
                if r == 0 and tie is None:
                    tie = (i + 1, j + 1)
            if not ok:
                break
        if not ok:
            continue
        if tie is not None:
            raise NonGenericWeightsError(T, tie)
        cells.append(T)
    return CellCollection(n, d, tuple(cells))
