"""Ground-truth subdivision generators for the test surface."""

from __future__ import annotations

import itertools

from .subdivision import CellCollection, validate_subdivision
from .types import TooLargeError, TropicalType


class NotAPermutationError(ValueError):
    """Expected a permutation of 1..n."""


def staircase(n: int, d: int) -> CellCollection:
    """One cell per monotone lattice path from (1,1) to (n,d).

    The cell's tree has edge (i, j) exactly when the path visits (i, j), so
    there are C(n+d-2, d-1) cells.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    cells = []
    steps = n + d - 2
    for right_steps in itertools.combinations(range(steps), d - 1):
        masks = [0] * n
        i = j = 1
        masks[0] = 1
        for s in range(steps):
            if s in right_steps:
                j += 1
            else:
                i += 1
            masks[i - 1] |= 1 << (j - 1)
        cells.append(TropicalType(d, tuple(masks)))
    return CellCollection(n, d, tuple(cells))


def prism_triangulation(perm: tuple[int, ...] | list[int]) -> CellCollection:
    """The triangulation of Delta_{n-1} x Delta_1 associated with an ordering.

    Cell k sends the first k-1 entries of the ordering to {2}, the k-th to
    {1,2}, and the rest to {1}.  The folklore formula is not trusted: the
    output is run through the validator and must pass.
    """
    perm = tuple(int(p) for p in perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise NotAPermutationError(f"{perm} is not a permutation of 1..{n}")
    cells = []
    for k in range(1, n + 1):
        masks = [0] * n
        for t, i in enumerate(perm, start=1):
            if t < k:
                masks[i - 1] = 0b10
            elif t == k:
                masks[i - 1] = 0b11
            else:
                masks[i - 1] = 0b01
        cells.append(TropicalType(2, tuple(masks)))
    C = CellCollection(n, 2, tuple(cells))
    if not validate_subdivision(C).ok:
        raise AssertionError(f"prism cells for {perm} failed validation")
    return C


def all_prism_triangulations(n: int) -> list[CellCollection]:
    """Triangulations of the prism for every ordering of 1..n, deduplicated."""
    if n > 6:
        raise TooLargeError("prism enumeration capped at n = 6")
    seen = set()
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        C = prism_triangulation(perm)
        key = frozenset(C.cells)
        if key not in seen:
            seen.add(key)
            out.append(C)
    return out
