import itertools
import random

import pytest

from tomkit import (
    CellCollection,
    NoStrongPathError,
    ShapeMismatchError,
    TypePath,
    TypeSystem,
    adjacent,
    delta,
    eliminate_via_path,
    elimination_witnesses,
    face_types,
    q_alpha,
    q_alpha_connected,
    rank,
    staircase,
    strong_path,
    ttype,
)

SQUARE_FACES = face_types(
    CellCollection(2, 2, (ttype(2, [1, 2], [2]), ttype(2, [1], [1, 2])))
)


def test_adjacent_examples():
    assert adjacent(ttype(2, [1, 2], [2]), ttype(2, [1], [2]))
    assert not adjacent(ttype(2, [1, 2], [2]), ttype(2, [1], [1, 2]))
    A = ttype(2, [1, 2], [2])
    assert not adjacent(A, A)
    with pytest.raises(ShapeMismatchError):
        adjacent(ttype(2, [1]), ttype(2, [1], [2]))


def test_q_alpha_with_zero_alpha_is_everything():
    S = face_types(staircase(3, 3))
    assert q_alpha(S, (0, 0, 0)).types == S.types


def test_q_alpha_filters_by_cardinality():
    S = face_types(staircase(3, 3))
    sub = q_alpha(S, (1, 0, 0))
    assert sub.types == {t for t in S.types if t.masks[0].bit_count() >= 2}
    assert len(sub) < len(S)


def test_q_alpha_of_rank_contains_both_endpoints():
    S = face_types(staircase(3, 3))
    members = sorted(S.types, key=lambda t: t.sort_key())
    for A, B in itertools.combinations(members[:12], 2):
        sub = q_alpha(S, rank(A, B))
        assert A in sub and B in sub


def test_q_alpha_connected_full_system():
    S = face_types(staircase(3, 3))
    rep = q_alpha_connected(S, (0, 0, 0))
    assert rep.connected and rep.size == len(S) and len(rep.components) == 1


def test_q_alpha_connected_empty_subsystem():
    S = face_types(staircase(3, 3))
    rep = q_alpha_connected(S, (3, 3, 3))
    assert rep.size == 0 and rep.components == () and rep.connected


def test_q_alpha_connected_across_small_alphas():
    S = face_types(staircase(3, 3))
    for alpha in itertools.product(range(3), repeat=3):
        if sum(alpha) <= S.d - 1:
            assert q_alpha_connected(S, alpha).connected


def test_disconnected_adhoc_system_is_reported():
    S = TypeSystem.from_types([ttype(2, [1], [1]), ttype(2, [2], [2])])
    rep = q_alpha_connected(S, (0, 0))
    assert not rep.connected and len(rep.components) == 2


# ---------------------------------------------------------------------------
# strong paths


def test_strong_path_between_identical_types():
    A = ttype(2, [1, 2], [2])
    p = strong_path(SQUARE_FACES, A, A)
    assert p.steps == (A,) and p.length == 0


def test_strong_path_across_the_square():
    A, B = ttype(2, [1, 2], [2]), ttype(2, [1], [1, 2])
    p = strong_path(SQUARE_FACES, A, B)
    assert p.steps == (A, ttype(2, [1], [2]), B)
    assert p.length == 2 == delta(A, B)


def test_strong_path_requires_membership():
    with pytest.raises(ValueError):
        strong_path(SQUARE_FACES, ttype(2, [1, 2], [1, 2]), ttype(2, [1], [1]))


def test_strong_path_single_coordinate_edit_pattern():
    # one coordinate morphing 123 -> 1234 -> 12345 -> 1245 -> 145: additions
    # from the target before deletions from the source
    steps = [
        ttype(5, [1, 2, 3]),
        ttype(5, [1, 2, 3, 4]),
        ttype(5, [1, 2, 3, 4, 5]),
        ttype(5, [1, 2, 4, 5]),
        ttype(5, [1, 4, 5]),
    ]
    S = TypeSystem.from_types(steps)
    p = strong_path(S, steps[0], steps[-1])
    assert list(p.steps) == steps
    assert p.length == delta(steps[0], steps[-1]) == 4


def test_no_strong_path_in_a_gappy_system():
    S = TypeSystem.from_types([ttype(2, [1]), ttype(2, [2])])
    with pytest.raises(NoStrongPathError):
        strong_path(S, ttype(2, [1]), ttype(2, [2]))


def _check_strong(path, A, B):
    """The path edits every coordinate monotonically inside the union bound."""
    n = A.n
    phase = [0] * n
    for prev, cur in zip(path.steps, path.steps[1:]):
        for i in range(n):
            a, b, p, c = A.masks[i], B.masks[i], prev.masks[i], cur.masks[i]
            if p == c:
                continue
            added, removed = c & ~p, p & ~c
            assert added & ~(b & ~a) == 0, "additions come from B minus A"
            assert removed & ~(a & ~b) == 0, "deletions come from A minus B"
            if added:
                assert phase[i] == 0, "no additions after a deletion"
            if removed:
                phase[i] = 1
    for step in path.steps:
        for i in range(n):
            a, b, c = A.masks[i], B.masks[i], step.masks[i]
            assert c & ~(a | b) == 0
            assert c & a == a or c & b == b, "always contains one endpoint"
            assert c.bit_count() > min(a.bit_count(), b.bit_count()) - 1


def test_strong_paths_exist_for_all_pairs_of_staircase_33():
    S = face_types(staircase(3, 3))
    members = sorted(S.types, key=lambda t: t.sort_key())
    for A, B in itertools.combinations(members, 2):
        p = strong_path(S, A, B)
        assert p.length == delta(A, B)
        assert all(t in S for t in p.steps)
        _check_strong(p, A, B)


def test_path_members_stay_in_q_alpha_of_the_rank():
    S = face_types(staircase(3, 3))
    members = sorted(S.types, key=lambda t: t.sort_key())
    rng = random.Random(4)
    for _ in range(50):
        A, B = rng.sample(members, 2)
        sub = q_alpha(S, rank(A, B))
        assert all(t in sub for t in strong_path(S, A, B).steps)


# ---------------------------------------------------------------------------
# elimination via strong paths


def test_eliminate_identical_types():
    A = ttype(2, [1, 2], [2])
    assert eliminate_via_path(SQUARE_FACES, A, A, 1) == A


def test_eliminate_on_the_square():
    A, B = ttype(2, [1, 2], [2]), ttype(2, [1], [1, 2])
    C = eliminate_via_path(SQUARE_FACES, A, B, 2)
    assert C == ttype(2, [1], [1, 2])
    assert C in elimination_witnesses(SQUARE_FACES, A, B, 2)


def test_eliminate_agrees_with_brute_force_on_staircase_33():
    S = face_types(staircase(3, 3))
    members = sorted(S.types, key=lambda t: t.sort_key())
    rng = random.Random(100)
    for _ in range(100):
        A, B = rng.choice(members), rng.choice(members)
        j = rng.randint(1, 3)
        C = eliminate_via_path(S, A, B, j)
        assert C.masks[j - 1] == A.masks[j - 1] | B.masks[j - 1]
        assert all(
            c in (a, b, a | b) for c, a, b in zip(C.masks, A.masks, B.masks)
        )
        assert C in elimination_witnesses(S, A, B, j)


def test_eliminate_rejects_bad_positions():
    A = ttype(2, [1, 2], [2])
    with pytest.raises(ValueError):
        eliminate_via_path(SQUARE_FACES, A, A, 0)
    with pytest.raises(ValueError):
        eliminate_via_path(SQUARE_FACES, A, A, 3)


def test_type_path_validates_adjacency():
    with pytest.raises(ValueError):
        TypePath((ttype(2, [1], [1]), ttype(2, [2], [2])))
