"""Core combinatorial objects: (n,d)-types and the operations on them.

An (n,d)-type is an n-tuple of nonempty subsets of [d] = {1, ..., d}.  It
doubles as a subgraph of the complete bipartite graph K_{n,d}: there is an
edge (i, j) exactly when j lies in the i-th coordinate.  All values here are
immutable, so every operation is a pure function and safe to share between
threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

MAX_D = 64  # subsets of [d] are machine-word bit sets


class ShapeMismatchError(ValueError):
    """Operands do not share the same (n, d) parameters."""


class MissingElementError(ValueError):
    """Some element of [d] occurs in no coordinate; the dual is undefined."""

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} occurs in no coordinate")


class CyclicTypeError(ValueError):
    """The type contains a cycle when viewed as a bipartite subgraph."""


class TooLargeError(ValueError):
    """Input exceeds the size guard of a brute-force routine."""


def _mask(elements: Iterable[int], d: int) -> int:
    m = 0
    for j in elements:
        j = int(j)
        if not 1 <= j <= d:
            raise ValueError(f"element {j} outside 1..{d}")
        m |= 1 << (j - 1)
    return m


def mask_elements(mask: int) -> tuple[int, ...]:
    """1-based elements of a bit set, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class TropicalType:
    """An n-tuple of nonempty subsets of [d], stored as bit masks.

    Bit j-1 of ``masks[i]`` records whether element j belongs to coordinate
    i+1.  Elements are 1-based everywhere in the public surface; the bit
    positions are the only 0-based internals.
    """

    d: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.d <= MAX_D:
            raise ValueError(f"d must be in 1..{MAX_D}, got {self.d}")
        if not isinstance(self.masks, tuple):
            object.__setattr__(self, "masks", tuple(self.masks))
        if not self.masks:
            raise ValueError("a type needs at least one coordinate")
        full = (1 << self.d) - 1
        for i, m in enumerate(self.masks):
            if not 0 < m <= full:
                raise ValueError(
                    f"coordinate {i + 1} must be a nonempty subset of 1..{self.d}"
                )

    @property
    def n(self) -> int:
        return len(self.masks)

    @property
    def sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(mask_elements(m)) for m in self.masks)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks)

    @property
    def is_tope(self) -> bool:
        return all(m.bit_count() == 1 for m in self.masks)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (i, j) of the bipartite subgraph, 1-based, in sorted order."""
        for i, m in enumerate(self.masks, start=1):
            for j in mask_elements(m):
                yield (i, j)

    def with_mask(self, i: int, mask: int) -> "TropicalType":
        """Replace coordinate i (1-based) by the given nonempty bit set."""
        masks = list(self.masks)
        masks[i - 1] = mask
        return TropicalType(self.d, tuple(masks))

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(mask_elements(m) for m in self.masks)

    def as_lists(self) -> list[list[int]]:
        return [list(mask_elements(m)) for m in self.masks]

    def compact(self) -> str:
        """Human form: ``(123, 3, 3)`` for d <= 9, set notation otherwise."""
        if self.d <= 9:
            parts = ["".join(str(j) for j in mask_elements(m)) for m in self.masks]
        else:
            parts = ["{" + ",".join(str(j) for j in mask_elements(m)) + "}" for m in self.masks]
        return "(" + ", ".join(parts) + ")"

    def __repr__(self) -> str:
        return f"ttype[{self.n},{self.d}]{self.compact()}"


def ttype(d: int, *coords: Iterable[int]) -> TropicalType:
    """Build a type from 1-based element collections: ``ttype(2, [1,2], [2])``."""
    return TropicalType(d, tuple(_mask(c, d) for c in coords))


class DegreeVector(NamedTuple):
    entries: tuple[int, ...]
    side: str  # "left" or "right"

    @property
    def boundary_incident(self) -> bool:
        """True when some vertex is missing entirely (raw degree 0)."""
        return any(e < 0 for e in self.entries)


def left_degree_vector(T: TropicalType) -> DegreeVector:
    """Degrees of the left vertices, each minus one."""
    return DegreeVector(tuple(m.bit_count() - 1 for m in T.masks), "left")


def right_degree_vector(T: TropicalType) -> DegreeVector:
    """Degrees of the right vertices, each minus one.

    A right vertex covered by no coordinate yields entry -1; such types sit on
    the boundary and callers expecting spanning trees must reject them.
    """
    counts = [0] * T.d
    for m in T.masks:
        for j in mask_elements(m):
            counts[j - 1] += 1
    return DegreeVector(tuple(c - 1 for c in counts), "right")


def dual(T: TropicalType) -> TropicalType:
    """Transpose the bipartite incidence: j in A_i becomes i in (dual A)_j.

    Defined only when every element of [d] occurs somewhere; otherwise some
    coordinate of the transpose would be empty.
    """
    covered = 0
    for m in T.masks:
        covered |= m
    if covered != (1 << T.d) - 1:
        missing = (~covered) & ((1 << T.d) - 1)
        raise MissingElementError(mask_elements(missing)[0])
    out = [0] * T.d
    for i, m in enumerate(T.masks):
        bit = 1 << i
        for j in mask_elements(m):
            out[j - 1] |= bit
    return TropicalType(T.n, tuple(out))


# ---------------------------------------------------------------------------
# Comparability graphs (semidigraphs on [d])


@dataclass(frozen=True)
class ComparabilityGraph:
    """Semidigraph on vertex set [d]: undirected and directed edges mixed.

    Self-loops never appear: a loop at j would force j into both coordinate
    intersections, making it undirected and irrelevant for directed cycles.
    Parallel edges from distinct coordinates are merged per orientation.
    """

    d: int
    undirected_edges: frozenset[frozenset[int]]
    directed_edges: frozenset[tuple[int, int]]


def comparability_graph(A: TropicalType, B: TropicalType) -> ComparabilityGraph:
    """Edges j--k for each coordinate i with j in A_i and k in B_i.

    The edge is undirected when both j and k lie in the intersection of the
    two coordinates, and directed j -> k otherwise.
    """
    if (A.n, A.d) != (B.n, B.d):
        raise ShapeMismatchError(f"({A.n},{A.d}) vs ({B.n},{B.d})")
    undirected: set[frozenset[int]] = set()
    directed: set[tuple[int, int]] = set()
    for a, b in zip(A.masks, B.masks):
        common = a & b
        for j in mask_elements(a):
            j_common = bool(common & (1 << (j - 1)))
            for k in mask_elements(b):
                if j == k:
                    continue
                if j_common and common & (1 << (k - 1)):
                    undirected.add(frozenset((j, k)))
                else:
                    directed.add((j, k))
    return ComparabilityGraph(A.d, frozenset(undirected), frozenset(directed))


def directed_cycle(G: ComparabilityGraph) -> tuple[int, ...] | None:
    """A directed cycle of G, or None.

    A directed cycle walks undirected edges freely but must use at least one
    directed edge.  Equivalent formulation: orient undirected edges both
    ways; a cycle exists exactly when some directed edge has its head able to
    reach its tail.  Returns the cycle as a vertex tuple (closure implied).
    """
    adj: dict[int, set[int]] = {v: set() for v in range(1, G.d + 1)}
    for j, k in G.directed_edges:
        adj[j].add(k)
    for e in G.undirected_edges:
        j, k = tuple(e)
        adj[j].add(k)
        adj[k].add(j)
    for u, v in sorted(G.directed_edges):
        # BFS from v back to u; the arc u -> v then closes the cycle
        parent: dict[int, int | None] = {v: None}
        queue = [v]
        while queue:
            cur = queue.pop(0)
            if cur == u:
                path = []
                node: int | None = cur
                while node is not None:
                    path.append(node)
                    node = parent[node]
                path.reverse()  # v ... u
                return (u, *path[:-1])
            for nxt in adj[cur]:
                if nxt not in parent:
                    parent[nxt] = cur
                    queue.append(nxt)
    return None


def is_acyclic(G: ComparabilityGraph) -> bool:
    return directed_cycle(G) is None


# ---------------------------------------------------------------------------
# Refinements


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered partition of [d] into nonempty, disjoint blocks."""

    d: int
    blocks: tuple[frozenset[int], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        masks = tuple(_mask(b, self.d) for b in self.blocks)
        union = 0
        for m in masks:
            if m == 0:
                raise ValueError("partition blocks must be nonempty")
            if m & union:
                raise ValueError("partition blocks must be disjoint")
            union |= m
        if union != (1 << self.d) - 1:
            raise ValueError("partition blocks must cover 1..d")
        object.__setattr__(self, "_masks", masks)

    def __repr__(self) -> str:
        body = "|".join("".join(str(j) for j in sorted(b)) for b in self.blocks)
        return f"partition({body})"


def partition(d: int, *blocks: Iterable[int]) -> OrderedPartition:
    return OrderedPartition(d, tuple(frozenset(b) for b in blocks))


def ordered_partitions(d: int) -> Iterator[OrderedPartition]:
    """All ordered set partitions of [d] (Fubini-number many)."""
    full = (1 << d) - 1

    def rec(remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        # enumerate nonempty submasks of `remaining` as the first block
        sub = remaining
        while sub:
            for rest in rec(remaining & ~sub):
                yield (sub, *rest)
            sub = (sub - 1) & remaining

    for mask_blocks in rec(full):
        yield OrderedPartition(
            d, tuple(frozenset(mask_elements(m)) for m in mask_blocks)
        )


def refine(A: TropicalType, P: OrderedPartition) -> TropicalType:
    """Intersect each coordinate with the last block of P it meets."""
    if P.d != A.d:
        raise ShapeMismatchError(f"partition of [{P.d}] applied to d={A.d}")
    out = []
    for m in A.masks:
        for block in reversed(P._masks):
            inter = m & block
            if inter:
                out.append(inter)
                break
    return TropicalType(A.d, tuple(out))


# ---------------------------------------------------------------------------
# Bipartite-subgraph structure


def _scan_components(T: TropicalType) -> tuple[int, int, bool]:
    """(incident vertex count, component count, has_cycle) of the subgraph.

    Union-find over the n + d vertices; only vertices incident to an edge
    are counted.
    """
    n = T.n
    parent = list(range(n + T.d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    incident: set[int] = set()
    components = 0
    has_cycle = False
    for i, m in enumerate(T.masks):
        for j in mask_elements(m):
            u, v = i, n + j - 1
            for w in (u, v):
                if w not in incident:
                    incident.add(w)
                    components += 1
            ru, rv = find(u), find(v)
            if ru == rv:
                has_cycle = True
            else:
                parent[ru] = rv
                components -= 1
    return len(incident), components, has_cycle


def is_acyclic_type(T: TropicalType) -> bool:
    """No cycle in the bipartite subgraph view (a forest)."""
    return not _scan_components(T)[2]


def is_spanning_tree(T: TropicalType) -> bool:
    """Connected, acyclic, and touching all n + d vertices of K_{n,d}."""
    incident, components, has_cycle = _scan_components(T)
    return not has_cycle and components == 1 and incident == T.n + T.d


def single_deletion_refinements(A: TropicalType) -> frozenset[TropicalType]:
    """All types obtained by deleting one element from a coordinate of size >= 2.

    Requires A to be acyclic as a subgraph; each result is then reachable as
    an ordered-partition refinement of A.
    """
    if not is_acyclic_type(A):
        raise CyclicTypeError("single deletions need an acyclic type")
    out = set()
    for i, m in enumerate(A.masks, start=1):
        if m.bit_count() < 2:
            continue
        for j in mask_elements(m):
            out.add(A.with_mask(i, m & ~(1 << (j - 1))))
    return frozenset(out)


# ---------------------------------------------------------------------------
# Rank and distance


def rank(A: TropicalType, B: TropicalType) -> tuple[int, ...]:
    """Componentwise min(|A_i|, |B_i|) - 1; compared by dominance order."""
    if (A.n, A.d) != (B.n, B.d):
        raise ShapeMismatchError(f"({A.n},{A.d}) vs ({B.n},{B.d})")
    return tuple(
        min(a.bit_count(), b.bit_count()) - 1 for a, b in zip(A.masks, B.masks)
    )


def delta(A: TropicalType, B: TropicalType) -> int:
    """Sum of coordinatewise symmetric-difference sizes."""
    if (A.n, A.d) != (B.n, B.d):
        raise ShapeMismatchError(f"({A.n},{A.d}) vs ({B.n},{B.d})")
    return sum((a ^ b).bit_count() for a, b in zip(A.masks, B.masks))
