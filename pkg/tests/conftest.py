from __future__ import annotations

import hypothesis.strategies as st

from degseq import IntervalInstance


@st.composite
def interval_instances(draw, max_n: int = 5, max_bound: int = 4):
    """Small random instances; both bounds drawn freely then ordered."""
    n = draw(st.integers(1, max_n))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, max_bound), st.integers(0, max_bound)),
            min_size=n,
            max_size=n,
        )
    )
    a = tuple(min(x, y) for x, y in pairs)
    b = tuple(max(x, y) for x, y in pairs)
    return IntervalInstance(a, b)


@st.composite
def point_instances(draw, max_n: int = 6, max_bound: int = 6):
    """Instances with a == b (a single pinned sequence)."""
    n = draw(st.integers(1, max_n))
    seq = tuple(draw(st.lists(st.integers(0, max_bound), min_size=n, max_size=n)))
    return IntervalInstance(seq, seq)


degree_sequences = st.lists(st.integers(0, 6), min_size=1, max_size=6)
