"""Degree-sequence primitives against frozen values and the graph-search oracle."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degseq import (
    NotGraphicError,
    SimpleGraph,
    brute_force_graphic,
    eg_slack,
    eg_slacks,
    is_graphic,
    realize,
)
from conftest import degree_sequences


class TestIsGraphic:
    def test_known_values(self):
        assert is_graphic((2, 2, 2)) is True
        assert is_graphic((1, 1, 1)) is False          # odd sum
        assert is_graphic((3, 3, 1, 1)) is False       # fails at t=2
        assert is_graphic((0, 0, 0, 0)) is True
        assert is_graphic((0,)) is True
        assert is_graphic((1,)) is False
        assert is_graphic((2,)) is False               # even sum, t=1 fails

    def test_entry_larger_than_n_minus_1(self):
        # accepted as input, rejected by the t=1 inequality
        assert is_graphic((5, 1)) is False

    def test_validation(self):
        with pytest.raises(ValueError):
            is_graphic(())
        with pytest.raises(ValueError):
            is_graphic((1, -2))

    @given(degree_sequences)
    def test_matches_graph_search(self, d):
        assert is_graphic(d) == brute_force_graphic(d)

    @given(degree_sequences, st.randoms(use_true_random=False))
    def test_permutation_invariant(self, d, rng):
        shuffled = list(d)
        rng.shuffle(shuffled)
        assert is_graphic(d) == is_graphic(shuffled)

    @given(degree_sequences)
    def test_appending_zero_preserves_graphic(self, d):
        if is_graphic(d):
            assert is_graphic(list(d) + [0])


class TestEgSlack:
    def test_known_values(self):
        assert eg_slack((3, 3, 1, 1), 2) == -2
        assert eg_slack((2, 2, 2), 1) == 0
        assert eg_slack((0, 0), 1) == 0

    def test_t_out_of_range(self):
        with pytest.raises(ValueError):
            eg_slack((1, 1), 0)
        with pytest.raises(ValueError):
            eg_slack((1, 1), 3)

    @given(degree_sequences)
    def test_table_matches_single(self, d):
        table = eg_slacks(d)
        assert table == [eg_slack(d, t) for t in range(1, len(d) + 1)]

    @given(degree_sequences)
    def test_even_sum_graphic_iff_all_slacks_nonnegative(self, d):
        if sum(d) % 2 == 0:
            assert is_graphic(d) == all(s >= 0 for s in eg_slacks(d))


class TestRealize:
    def test_triangle(self):
        g = realize((2, 2, 2))
        assert g.edges == frozenset({(0, 1), (0, 2), (1, 2)})

    def test_star(self):
        g = realize((3, 1, 1, 1))
        assert g.edges == frozenset({(0, 1), (0, 2), (0, 3)})

    def test_path(self):
        g = realize((2, 2, 1, 1))
        assert g.degree_sequence() == (2, 2, 1, 1)

    def test_not_graphic_odd_sum(self):
        with pytest.raises(NotGraphicError) as exc:
            realize((1, 1, 1))
        assert exc.value.reason == "odd sum"
        assert exc.value.failing_t is None

    def test_not_graphic_failing_t(self):
        with pytest.raises(NotGraphicError) as exc:
            realize((3, 3, 1, 1))
        assert exc.value.failing_t == 2

    @given(st.integers(1, 30), st.integers(0, 10**6))
    @settings(max_examples=60)
    def test_random_graph_degrees_roundtrip(self, n, seed):
        rng = random.Random(seed)
        edges = frozenset(
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4
        )
        want = SimpleGraph(n=n, edges=edges).degree_sequence()
        assert realize(want).degree_sequence() == want


class TestSimpleGraph:
    def test_canonical_edges_enforced(self):
        with pytest.raises(ValueError):
            SimpleGraph(n=2, edges=frozenset({(1, 0)}))
        with pytest.raises(ValueError):
            SimpleGraph(n=2, edges=frozenset({(0, 2)}))

    def test_degree_sequence(self):
        g = SimpleGraph(n=3, edges=frozenset({(0, 1)}))
        assert g.degree_sequence() == (1, 1, 0)
