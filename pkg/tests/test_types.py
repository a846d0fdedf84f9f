import itertools

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tomkit import (
    ComparabilityGraph,
    CyclicTypeError,
    MissingElementError,
    OrderedPartition,
    ShapeMismatchError,
    TropicalType,
    comparability_graph,
    delta,
    directed_cycle,
    dual,
    is_acyclic,
    is_acyclic_type,
    is_spanning_tree,
    left_degree_vector,
    partition,
    rank,
    refine,
    right_degree_vector,
    single_deletion_refinements,
    staircase,
    ttype,
)
from strategies import partitions_of, tropical_types, type_pairs


def test_type_construction_rejects_empty_coordinates():
    with pytest.raises(ValueError):
        ttype(2, [1], [])
    with pytest.raises(ValueError):
        ttype(2, [3])
    with pytest.raises(ValueError):
        TropicalType(0, (1,))


def test_type_equality_and_hash_are_structural():
    assert ttype(3, [2, 1], [3]) == ttype(3, [1, 2], [3])
    assert hash(ttype(3, [1, 2], [3])) == hash(ttype(3, {2, 1}, {3}))


def test_left_degree_vector_examples():
    assert left_degree_vector(ttype(2, [1, 2], [2])).entries == (1, 0)
    assert left_degree_vector(ttype(1, [1], [1], [1])).entries == (0, 0, 0)


def test_right_degree_vector_examples():
    assert right_degree_vector(ttype(2, [1, 2], [2])).entries == (0, 1)
    assert right_degree_vector(ttype(2, [1], [2])).entries == (0, 0)
    assert not right_degree_vector(ttype(2, [1], [2])).boundary_incident
    assert right_degree_vector(ttype(2, [1], [1])).entries == (1, -1)
    assert right_degree_vector(ttype(2, [1], [1])).boundary_incident


def test_degree_vectors_of_staircase_cell():
    # read the degrees off a generated cell rather than trusting arithmetic
    cell = ttype(3, [1, 2, 3], [3], [3])
    assert cell in staircase(3, 3).cells
    assert left_degree_vector(cell).entries == (2, 0, 0)
    assert right_degree_vector(cell).entries == (0, 0, 2)


def test_dual_examples():
    assert dual(ttype(2, [1, 2], [2])) == ttype(2, [1], [1, 2])
    assert dual(ttype(3, [1, 2, 3], [3], [3])) == ttype(3, [1], [1], [1, 2, 3])
    with pytest.raises(MissingElementError) as exc:
        dual(ttype(2, [1], [1]))
    assert exc.value.element == 2


@given(tropical_types())
def test_dual_is_an_involution(T):
    assume(all(j in {e for m in T.sets for e in m} for j in range(1, T.d + 1)))
    assert dual(dual(T)) == T


@given(tropical_types())
def test_dual_swaps_degree_vectors(T):
    covered = set().union(*T.sets)
    assume(covered == set(range(1, T.d + 1)))
    assert left_degree_vector(dual(T)).entries == right_degree_vector(T).entries
    assert right_degree_vector(dual(T)).entries == left_degree_vector(T).entries


def test_spanning_tree_degree_sums():
    for n, d in itertools.product(range(1, 5), repeat=2):
        for cell in staircase(n, d).cells:
            assert is_spanning_tree(cell)
            assert sum(left_degree_vector(cell).entries) == d - 1
            assert sum(right_degree_vector(cell).entries) == n - 1
            assert cell.edge_count == n + d - 1


# ---------------------------------------------------------------------------
# comparability graphs


def test_comparability_graph_same_type_is_undirected():
    G = comparability_graph(ttype(2, [1, 2], [2]), ttype(2, [1, 2], [2]))
    assert not G.directed_edges
    assert is_acyclic(G)


def test_comparability_graph_enumerates_pairs():
    # hand enumeration: i=1 gives 1->2 (1 not shared), the self pair (2,2)
    # drops; i=2 gives 1->2 again (2 not in B_2 is false, 1 shared but 2 not)
    G = comparability_graph(ttype(2, [1, 2], [1]), ttype(2, [2], [1, 2]))
    assert G.directed_edges == {(1, 2)}
    assert G.undirected_edges == frozenset()
    assert is_acyclic(G)


def test_comparability_graph_directed_two_cycle():
    G = comparability_graph(ttype(2, [1], [2]), ttype(2, [2], [1]))
    assert G.directed_edges == {(1, 2), (2, 1)}
    assert not is_acyclic(G)


def _brute_force_acyclic(G: ComparabilityGraph) -> bool:
    # enumerate all candidate vertex cycles and check edge availability
    verts = range(1, G.d + 1)
    und = {tuple(sorted(e)) for e in G.undirected_edges}

    def has_edge(a, b):
        return (a, b) in G.directed_edges or tuple(sorted((a, b))) in und

    for k in range(2, G.d + 1):
        for cyc in itertools.permutations(verts, k):
            edges = list(zip(cyc, cyc[1:] + cyc[:1]))
            if all(has_edge(a, b) for a, b in edges) and any(
                e in G.directed_edges for e in edges
            ):
                return False
    return True


def test_is_acyclic_examples_against_walk_enumeration():
    undirected_only = ComparabilityGraph(3, frozenset({frozenset({1, 2})}), frozenset())
    two_cycle = ComparabilityGraph(2, frozenset(), frozenset({(1, 2), (2, 1)}))
    mixed = ComparabilityGraph(
        3, frozenset({frozenset({2, 3})}), frozenset({(1, 2), (3, 1)})
    )
    assert is_acyclic(undirected_only) is True
    assert is_acyclic(two_cycle) is False
    assert is_acyclic(mixed) is False  # 1 -> 2 -- 3 -> 1
    for G in (undirected_only, two_cycle, mixed):
        assert is_acyclic(G) == _brute_force_acyclic(G)


@given(type_pairs())
def test_is_acyclic_matches_brute_force(pair):
    A, B = pair
    assume(A.d <= 4)
    G = comparability_graph(A, B)
    assert is_acyclic(G) == _brute_force_acyclic(G)


def test_directed_cycle_witness_is_a_cycle():
    G = comparability_graph(ttype(2, [1], [2]), ttype(2, [2], [1]))
    cyc = directed_cycle(G)
    assert cyc is not None and len(cyc) >= 2
    edges = list(zip(cyc, cyc[1:] + cyc[:1]))
    und = {frozenset(e) for e in G.undirected_edges}
    assert any(e in G.directed_edges for e in edges)
    for a, b in edges:
        assert (a, b) in G.directed_edges or frozenset((a, b)) in und


def test_comparability_graph_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        comparability_graph(ttype(2, [1]), ttype(3, [1]))


# ---------------------------------------------------------------------------
# refinements


def test_refine_identity_partition():
    A = ttype(3, [1, 2, 3], [3])
    assert refine(A, partition(3, [1, 2, 3])) == A


def test_refine_examples():
    assert refine(ttype(3, [1, 2, 3], [3]), partition(3, [1, 2], [3])) == ttype(3, [3], [3])
    assert refine(ttype(2, [1, 2], [1]), partition(2, [1], [2])) == ttype(2, [2], [1])


@given(tropical_types(max_d=4), st.data())
def test_refine_produces_valid_types(T, data):
    P = data.draw(partitions_of(T.d))
    R = refine(T, P)
    assert all(r & ~a == 0 for r, a in zip(R.masks, T.masks))


def test_partition_validation():
    with pytest.raises(ValueError):
        partition(3, [1, 2], [2, 3])  # overlap
    with pytest.raises(ValueError):
        partition(3, [1, 2])  # missing 3
    with pytest.raises(ValueError):
        OrderedPartition(2, (frozenset(), frozenset({1, 2})))


def test_single_deletion_examples():
    assert single_deletion_refinements(ttype(2, [1], [2])) == frozenset()
    assert single_deletion_refinements(ttype(2, [1, 2], [2])) == {
        ttype(2, [1], [2]),
        ttype(2, [2], [2]),
    }
    four = single_deletion_refinements(ttype(3, [1, 2], [2, 3]))
    assert four == {
        ttype(3, [1], [2, 3]),
        ttype(3, [2], [2, 3]),
        ttype(3, [1, 2], [2]),
        ttype(3, [1, 2], [3]),
    }


def test_single_deletion_rejects_cyclic_types():
    with pytest.raises(CyclicTypeError):
        single_deletion_refinements(ttype(2, [1, 2], [1, 2]))


def _deletion_partition(T, i, k):
    """The two-block partition (W^c + {k}, W - {k}) realizing one deletion.

    W is the set of right elements reachable from A_i - {k} through the other
    coordinates; acyclicity keeps k out of W, and every other coordinate ends
    up entirely inside W or entirely outside it.
    """
    reach = set(T.sets[i - 1]) - {k}
    changed = True
    while changed:
        changed = False
        for idx, c in enumerate(T.sets, start=1):
            if idx != i and c & reach and not c <= reach:
                reach |= c
                changed = True
    assert k not in reach, "reaching k again would close a cycle through i"
    first = (set(range(1, T.d + 1)) - reach) | {k}
    return OrderedPartition(T.d, (frozenset(first), frozenset(reach)))


@given(tropical_types(max_d=5))
def test_single_deletions_are_refinements(T):
    assume(is_acyclic_type(T))
    for i, coord in enumerate(T.sets, start=1):
        if len(coord) < 2:
            continue
        for k in coord:
            deleted = T.with_mask(i, T.masks[i - 1] & ~(1 << (k - 1)))
            P = _deletion_partition(T, i, k)
            assert refine(T, P) == deleted
            assert deleted in single_deletion_refinements(T)


# ---------------------------------------------------------------------------
# rank and delta


def test_rank_values():
    assert rank(ttype(3, [1, 2, 3], [2]), ttype(3, [3], [1, 2, 3])) == (0, 0)
    assert rank(ttype(5, [1, 2, 3], [4, 5]), ttype(5, [3], [1, 2, 5])) == (0, 1)
    A = ttype(4, [1, 2], [1, 2, 3], [4])
    assert rank(A, A) == (1, 2, 0)


def test_delta_values():
    A = ttype(3, [1, 2, 3], [2])
    assert delta(A, A) == 0
    assert delta(A, ttype(3, [3], [1, 2, 3])) == 4
    assert delta(ttype(2, [1], [1]), ttype(2, [2], [2])) == 4


@given(type_pairs())
def test_rank_delta_symmetry(pair):
    A, B = pair
    assert rank(A, B) == rank(B, A)
    assert delta(A, B) == delta(B, A)
    assert (delta(A, B) == 0) == (A == B)


def test_rank_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        rank(ttype(2, [1]), ttype(2, [1], [2]))
    with pytest.raises(ShapeMismatchError):
        delta(ttype(2, [1]), ttype(3, [1]))
