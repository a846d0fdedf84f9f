"""The four tropical-oriented-matroid axioms, each with violation witnesses.

Reports collect every violation instead of failing fast: the point of the
checker is diagnosis, not a quick verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .subdivision import TypeSystem
from .types import (
    CyclicTypeError,
    TropicalType,
    comparability_graph,
    directed_cycle,
    is_acyclic_type,
    mask_elements,
    ordered_partitions,
    refine,
)


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    ok: bool
    violations: tuple


@dataclass(frozen=True)
class TOMVerdict:
    boundary: AxiomReport
    surrounding: AxiomReport
    comparability: AxiomReport
    elimination: AxiomReport

    @property
    def reports(self) -> tuple[AxiomReport, ...]:
        return (self.boundary, self.surrounding, self.comparability, self.elimination)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)


def check_boundary(S: TypeSystem) -> AxiomReport:
    """Every constant singleton type (j, ..., j) must be present."""
    missing = []
    for j in range(1, S.d + 1):
        m = 1 << (j - 1)
        if (m,) * S.n not in S.mask_set:
            missing.append(j)
    return AxiomReport("boundary", not missing, tuple(missing))


def check_surrounding(S: TypeSystem, mode: str = "subset") -> AxiomReport:
    """Closure under refinement.

    subset mode: every single-element deletion of every type stays in the
    system.  Equivalent to full refinement closure when every type is acyclic
    as a subgraph, which holds for all face systems of subdivisions; cyclic
    types raise.  Violation witnesses: (type, coordinate, element).

    partition mode: the literal definition, over all ordered partitions of
    [d].  Witnesses: (type, partition, missing refinement).
    """
    if mode not in ("subset", "partition"):
        raise ValueError(f"unknown mode {mode!r}")
    violations = []
    if mode == "subset":
        for A in S:
            if not is_acyclic_type(A):
                raise CyclicTypeError(
                    f"{A!r} contains a cycle; subset mode needs acyclic types"
                )
            for i, m in enumerate(A.masks, start=1):
                if m.bit_count() < 2:
                    continue
                for j in mask_elements(m):
                    masks = list(A.masks)
                    masks[i - 1] = m & ~(1 << (j - 1))
                    if tuple(masks) not in S.mask_set:
                        violations.append((A, i, j))
    else:
        partitions = list(ordered_partitions(S.d))
        for A in S:
            for P in partitions:
                R = refine(A, P)
                if R.masks not in S.mask_set:
                    violations.append((A, P, R))
    return AxiomReport("surrounding", not violations, tuple(violations))


def check_comparability(S: TypeSystem) -> AxiomReport:
    """Comparability graphs of all pairs must be acyclic.

    The graph of (A, A) has only undirected edges and the graph of (B, A) is
    the reverse of (A, B), so unordered distinct pairs suffice.  Witnesses:
    (A, B, vertex cycle).
    """
    violations = []
    for A, B in itertools.combinations(sorted(S.types, key=TropicalType.sort_key), 2):
        cyc = directed_cycle(comparability_graph(A, B))
        if cyc is not None:
            violations.append((A, B, cyc))
    return AxiomReport("comparability", not violations, tuple(violations))


def _candidate_masks(A: TropicalType, B: TropicalType, j: int) -> Iterator[tuple[int, ...]]:
    """All coordinate patterns with the j-th coordinate forced to the union."""
    options = []
    for k, (a, b) in enumerate(zip(A.masks, B.masks), start=1):
        if k == j:
            options.append([a | b])
        else:
            opts = [a]
            if b not in opts:
                opts.append(b)
            if a | b not in opts:
                opts.append(a | b)
            options.append(opts)
    return itertools.product(*options)


def _has_elimination_witness(S: TypeSystem, A: TropicalType, B: TropicalType, j: int) -> bool:
    count = 1
    for k, (a, b) in enumerate(zip(A.masks, B.masks), start=1):
        if k != j:
            count *= len({a, b, a | b})
    if count <= len(S):
        return any(c in S.mask_set for c in _candidate_masks(A, B, j))
    # fewer members than candidate patterns: scan the system instead
    union = A.masks[j - 1] | B.masks[j - 1]
    for masks in S.mask_set:
        if masks[j - 1] != union:
            continue
        if all(
            m in (a, b, a | b)
            for k, (m, a, b) in enumerate(zip(masks, A.masks, B.masks), start=1)
            if k != j
        ):
            return True
    return False


def elimination_witnesses(
    S: TypeSystem, A: TropicalType, B: TropicalType, j: int
) -> tuple[TropicalType, ...]:
    """All C in S with C_j = A_j u B_j and C_k in {A_k, B_k, A_k u B_k}."""
    found = [
        TropicalType(S.d, c) for c in _candidate_masks(A, B, j) if c in S.mask_set
    ]
    return tuple(sorted(found, key=TropicalType.sort_key))


def check_elimination(S: TypeSystem) -> AxiomReport:
    """For every pair and position, some member must eliminate them.

    The predicate is symmetric in A and B, so unordered pairs are checked
    once; a pair with A = B is witnessed by A itself.  Witnesses of failure:
    (A, B, j).
    """
    violations = []
    ordered = sorted(S.types, key=TropicalType.sort_key)
    for A, B in itertools.combinations_with_replacement(ordered, 2):
        for j in range(1, S.n + 1):
            if not _has_elimination_witness(S, A, B, j):
                violations.append((A, B, j))
    return AxiomReport("elimination", not violations, tuple(violations))


def check_tom(S: TypeSystem) -> TOMVerdict:
    """All four axioms; surrounding runs in subset mode when every type is
    acyclic (always true for face systems) and partition mode otherwise."""
    mode = "subset" if all(is_acyclic_type(t) for t in S.types) else "partition"
    return TOMVerdict(
        boundary=check_boundary(S),
        surrounding=check_surrounding(S, mode),
        comparability=check_comparability(S),
        elimination=check_elimination(S),
    )
