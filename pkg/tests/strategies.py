"""Hypothesis strategies shared by the test modules."""

import hypothesis.strategies as st

from tomkit import OrderedPartition, TropicalType


@st.composite
def tropical_types(draw, n=None, d=None, max_n=4, max_d=5):
    d_ = d if d is not None else draw(st.integers(1, max_d))
    n_ = n if n is not None else draw(st.integers(1, max_n))
    masks = tuple(draw(st.integers(1, (1 << d_) - 1)) for _ in range(n_))
    return TropicalType(d_, masks)


@st.composite
def type_pairs(draw, max_n=4, max_d=5):
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(1, max_n))
    return draw(tropical_types(n=n, d=d)), draw(tropical_types(n=n, d=d))


@st.composite
def partitions_of(draw, d):
    """A random ordered partition of [d]: shuffle, then cut into blocks."""
    order = draw(st.permutations(list(range(1, d + 1))))
    cuts = draw(st.sets(st.integers(1, d - 1))) if d > 1 else set()
    blocks = []
    prev = 0
    for c in sorted(cuts) + [d]:
        blocks.append(frozenset(order[prev:c]))
        prev = c
    return OrderedPartition(d, tuple(blocks))
