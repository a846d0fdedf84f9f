"""Type adjacency, Q_alpha subsystems, and strong-path search.

A strong path between A and B is a shortest path that edits every coordinate
monotonically: per coordinate, only elements of B_i \\ A_i are ever added,
only elements of A_i \\ B_i are ever deleted, and all additions precede all
deletions.  Those constraints pin the length to exactly delta(A, B) and keep
every intermediate inside the union bound, which is what makes elimination
witnesses extractable from the path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .subdivision import TypeSystem
from .types import (
    ShapeMismatchError,
    TropicalType,
    delta,
    mask_elements,
)

RankVector = tuple[int, ...]  # entries >= -1, one per coordinate


class NoStrongPathError(Exception):
    """No strong path exists inside the system; valid face systems never
    trigger this, so it signals a non-subdivision input (or a bug)."""

    def __init__(self, A: TropicalType, B: TropicalType):
        self.A = A
        self.B = B
        super().__init__(f"no strong path between {A!r} and {B!r}")


def adjacent(A: TropicalType, B: TropicalType) -> bool:
    """Exactly one coordinate differs, and there by exactly one element."""
    if (A.n, A.d) != (B.n, B.d):
        raise ShapeMismatchError(f"({A.n},{A.d}) vs ({B.n},{B.d})")
    changed = 0
    single = False
    for a, b in zip(A.masks, B.masks):
        if a != b:
            changed += 1
            single = (a ^ b).bit_count() == 1
    return changed == 1 and single


def q_alpha(S: TypeSystem, alpha: RankVector) -> TypeSystem:
    """The subsystem of types with |A_i| > alpha_i in every coordinate."""
    if len(alpha) != S.n:
        raise ShapeMismatchError(f"alpha has {len(alpha)} entries, expected {S.n}")
    kept = frozenset(
        t
        for t in S.types
        if all(m.bit_count() > a for m, a in zip(t.masks, alpha))
    )
    return TypeSystem(S.n, S.d, kept, {t: c for t, c in S.provenance.items() if t in kept})


@dataclass(frozen=True)
class ConnectivityReport:
    alpha: tuple[int, ...]
    size: int
    components: tuple[frozenset[TropicalType], ...]

    @property
    def connected(self) -> bool:
        """Empty subsystems count as connected."""
        return len(self.components) <= 1


def _neighbors(masks: tuple[int, ...], d: int, member: frozenset) -> list[tuple[int, ...]]:
    out = []
    full = (1 << d) - 1
    for i, m in enumerate(masks):
        free = full & ~m
        for j in mask_elements(free):
            cand = masks[:i] + (m | (1 << (j - 1)),) + masks[i + 1 :]
            if cand in member:
                out.append(cand)
        if m.bit_count() >= 2:
            for j in mask_elements(m):
                cand = masks[:i] + (m & ~(1 << (j - 1)),) + masks[i + 1 :]
                if cand in member:
                    out.append(cand)
    return out


def q_alpha_connected(S: TypeSystem, alpha: RankVector) -> ConnectivityReport:
    """Connected components of Q_alpha under single-element adjacency."""
    sub = q_alpha(S, alpha)
    remaining = {t.masks: t for t in sub.types}
    components = []
    while remaining:
        start = next(iter(remaining))
        comp = []
        stack = [start]
        seen = {start}
        while stack:
            cur = stack.pop()
            comp.append(remaining[cur])
            for nxt in _neighbors(cur, S.d, remaining.keys()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        for t in comp:
            del remaining[t.masks]
        components.append(frozenset(comp))
    return ConnectivityReport(tuple(alpha), len(sub), tuple(components))


# ---------------------------------------------------------------------------
# Strong paths


@dataclass(frozen=True)
class TypePath:
    """A sequence of pairwise-adjacent types; length counts the steps."""

    steps: tuple[TropicalType, ...]

    def __post_init__(self):
        for a, b in zip(self.steps, self.steps[1:]):
            if not adjacent(a, b):
                raise ValueError(f"{a!r} and {b!r} are not adjacent")

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    def __iter__(self):
        return iter(self.steps)


def strong_path(S: TypeSystem, A: TropicalType, B: TropicalType) -> TypePath:
    """Lexicographically smallest strong path from A to B inside S.

    Depth-first search over states (current type, per-coordinate phase bit);
    the phase bit flips on a coordinate's first deletion, after which that
    coordinate accepts no additions.  Every legal move lowers the distance to
    B by one, so the search space is an acyclic layer graph and memoizing
    failed states makes the search linear in states.
    """
    if A not in S or B not in S:
        raise ValueError("both endpoints must belong to the system")
    amasks, bmasks = A.masks, B.masks
    n = len(amasks)
    member = S.mask_set
    failed: set[tuple[tuple[int, ...], int]] = set()

    def successors(cur: tuple[int, ...], phases: int):
        out = []
        for i in range(n):
            a, b, c = amasks[i], bmasks[i], cur[i]
            if not phases & (1 << i):
                for j in mask_elements(b & ~a & ~c):
                    cand = cur[:i] + (c | (1 << (j - 1)),) + cur[i + 1 :]
                    if cand in member:
                        out.append((cand, phases))
            for j in mask_elements(a & ~b & c):
                nm = c & ~(1 << (j - 1))
                if nm == 0:
                    continue
                cand = cur[:i] + (nm,) + cur[i + 1 :]
                if cand in member:
                    out.append((cand, phases | (1 << i)))
        out.sort(key=lambda s: tuple(mask_elements(m) for m in s[0]))
        return out

    def search(cur: tuple[int, ...], phases: int) -> list[tuple[int, ...]] | None:
        if cur == bmasks:
            return [cur]
        key = (cur, phases)
        if key in failed:
            return None
        for cand, ph in successors(cur, phases):
            rest = search(cand, ph)
            if rest is not None:
                return [cur] + rest
        failed.add(key)
        return None

    found = search(amasks, 0)
    if found is None:
        raise NoStrongPathError(A, B)
    return TypePath(tuple(TropicalType(A.d, m) for m in found))


def eliminate_via_path(
    S: TypeSystem, A: TropicalType, B: TropicalType, j: int
) -> TropicalType:
    """An elimination witness for (A, B) at position j, built constructively.

    Walk a strong path until the j-th coordinate equals A_j u B_j (additions
    precede deletions per coordinate, so such a member exists), then trim
    every other coordinate down to A_k, B_k, or their union.  The trimmed
    type stays in any system closed under taking nonempty coordinate subsets.
    """
    if not 1 <= j <= A.n:
        raise ValueError(f"position {j} outside 1..{A.n}")
    path = strong_path(S, A, B)
    union_j = A.masks[j - 1] | B.masks[j - 1]
    member = next(t for t in path if t.masks[j - 1] == union_j)
    out = []
    for k, (c, a, b) in enumerate(zip(member.masks, A.masks, B.masks), start=1):
        if k == j or c in (a, b, a | b):
            out.append(c)
        elif c & a == a:
            out.append(a)
        elif c & b == b:
            out.append(b)
        else:
            raise AssertionError(f"strong-path member violates the union bound at {k}")
    C = TropicalType(A.d, tuple(out))
    if C not in S:
        raise ValueError(
            "system is not closed under surrounding; trimmed witness left it"
        )
    return C
