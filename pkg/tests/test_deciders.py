"""Interval deciders: frozen examples, oracle equivalence, and relations."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degseq import (
    IntervalInstance,
    alpha,
    alpha_context,
    beta_context,
    brute_force_forcible,
    brute_force_potential,
    check_forcible,
    check_forcible_orderB,
    check_gy_necessary,
    check_gy_sufficient,
    check_potential,
    is_graphic,
    order_b_context,
    sort_order_B,
)
from conftest import interval_instances, point_instances


class TestAlpha:
    def test_frozen_examples(self):
        assert alpha(IntervalInstance(a=(1, 1), b=(1, 1)), 0) == 0
        assert alpha(IntervalInstance(a=(1, 1, 1), b=(1, 1, 1)), 0) == 1
        assert alpha(IntervalInstance(a=(0, 0), b=(1, 1)), 0) == 0

    def test_t_out_of_range(self):
        inst = IntervalInstance(a=(1,), b=(2,))
        with pytest.raises(ValueError):
            alpha(inst, -1)
        with pytest.raises(ValueError):
            alpha(inst, 2)

    @given(interval_instances())
    def test_context_consistency(self, inst):
        for t in range(inst.n + 1):
            ctx = alpha_context(inst, t)
            assert ctx.alpha in (0, 1)
            assert all(p >= t and ctx.view.b[p] >= t + 1 for p in ctx.j)
            if any(ctx.view.a[p] < ctx.view.b[p] for p in ctx.j):
                assert ctx.alpha == 0


class TestBeta:
    def test_frozen_examples(self):
        ctx = beta_context(IntervalInstance(a=(0, 0, 0), b=(1, 1, 1)), 1)
        assert ctx.beta == 1
        ctx = beta_context(IntervalInstance(a=(1, 1, 1, 1), b=(3, 3, 3, 3)), 2)
        assert ctx.beta == 0

    @given(point_instances())
    def test_zero_on_points(self, inst):
        for t in range(1, inst.n + 1):
            assert beta_context(inst, t).beta == 0

    @given(interval_instances())
    def test_partition(self, inst):
        for t in range(1, inst.n + 1):
            ctx = beta_context(inst, t)
            assert ctx.beta in (0, 1)
            assert sorted(ctx.i1 + ctx.i2 + ctx.i3) == list(range(inst.n))
            assert all(ctx.view.key(p) == ctx.rho for p in ctx.jstar)
            assert (t - 1) in ctx.jstar


class TestOrderBContext:
    @given(interval_instances())
    def test_xi_and_beta_prime_are_bits(self, inst):
        view = sort_order_B(inst)
        if view is None:
            return
        for t in range(inst.n + 1):
            ctx = order_b_context(view, not inst.is_point, t)
            assert ctx.xi in (0, 1)
            assert ctx.beta_prime in (0, 1)
            if inst.is_point:
                assert ctx.beta_prime == 0


class TestForcible:
    def test_frozen_examples(self):
        v = check_forcible(IntervalInstance(a=(0, 0, 0), b=(1, 1, 1)))
        assert v.decision == "yes" and not v.vacuous

        v = check_forcible(IntervalInstance(a=(1, 1, 1, 1), b=(3, 3, 3, 3)))
        assert v.decision == "no"
        assert v.failing_t == 2
        assert v.witness == (3, 3, 1, 1)
        assert v.witness_method == "construction"

        v = check_forcible(IntervalInstance(a=(2, 2, 2), b=(2, 2, 2)))
        assert v.decision == "yes" and not v.vacuous

    def test_vacuous_on_odd_point(self):
        v = check_forcible(IntervalInstance(a=(1, 1, 1), b=(1, 1, 1)))
        assert v.decision == "yes"
        assert v.vacuous

    def test_explain_table_shape(self):
        inst = IntervalInstance(a=(1, 1, 1, 1), b=(3, 3, 3, 3))
        v = check_forcible(inst, explain=True, witness=False)
        assert v.slacks is not None and len(v.slacks) == inst.n
        assert v.failing_t == min(
            t for t, s in enumerate(v.slacks, start=1) if s < 0
        )

    @given(interval_instances())
    @settings(max_examples=200)
    def test_matches_brute_force(self, inst):
        got = check_forcible(inst, witness=False).decision == "yes"
        assert got == brute_force_forcible(inst)

    @given(interval_instances())
    def test_backends_agree(self, inst):
        auto = check_forcible(inst, backend="auto", explain=True, witness=False)
        py = check_forcible(inst, backend="python", explain=True, witness=False)
        assert auto.decision == py.decision
        assert auto.failing_t == py.failing_t
        assert auto.slacks == py.slacks

    @given(interval_instances(), st.randoms(use_true_random=False))
    def test_permutation_invariant(self, inst, rng):
        idx = list(range(inst.n))
        rng.shuffle(idx)
        shuffled = IntervalInstance(
            a=tuple(inst.a[i] for i in idx), b=tuple(inst.b[i] for i in idx)
        )
        assert (
            check_forcible(inst, witness=False).decision
            == check_forcible(shuffled, witness=False).decision
        )

    @given(point_instances())
    def test_point_reduction(self, inst):
        """On pinned bounds the decider reduces to a graphicality test."""
        v = check_forcible(inst, witness=False)
        if sum(inst.a) % 2 == 1:
            assert v.decision == "yes" and v.vacuous
        else:
            assert (v.decision == "yes") == is_graphic(inst.a)


class TestPotential:
    def test_frozen_examples(self):
        v = check_potential(IntervalInstance(a=(3, 3, 3), b=(3, 3, 3)))
        assert v.decision == "no"
        assert v.failing_t == 0

        v = check_potential(IntervalInstance(a=(0, 0, 0, 0), b=(3, 3, 3, 3)))
        assert v.decision == "yes"

    def test_explain_table_shape(self):
        inst = IntervalInstance(a=(3, 3, 3), b=(3, 3, 3))
        v = check_potential(inst, explain=True)
        assert v.slacks is not None and len(v.slacks) == inst.n + 1
        assert v.failing_t == min(t for t, s in enumerate(v.slacks) if s < 0)

    @given(interval_instances())
    @settings(max_examples=200)
    def test_matches_brute_force(self, inst):
        got = check_potential(inst).decision == "yes"
        assert got == brute_force_potential(inst)

    @given(interval_instances())
    def test_backends_agree(self, inst):
        auto = check_potential(inst, backend="auto", explain=True)
        py = check_potential(inst, backend="python", explain=True)
        assert auto.decision == py.decision
        assert auto.failing_t == py.failing_t
        assert auto.slacks == py.slacks

    @given(point_instances())
    def test_point_reduction(self, inst):
        v = check_potential(inst)
        if sum(inst.a) % 2 == 1:
            assert v.decision == "no" and v.failing_t == 0
        else:
            assert (v.decision == "yes") == is_graphic(inst.a)


class TestOrderBDeciders:
    def test_frozen_examples(self):
        pt222 = IntervalInstance(a=(2, 2, 2), b=(2, 2, 2))
        assert check_gy_necessary(pt222).decision == "yes"
        assert check_gy_sufficient(pt222).decision == "yes"
        assert check_forcible_orderB(pt222).decision == "yes"

        assert (
            check_gy_necessary(IntervalInstance(a=(2, 1), b=(2, 4))).decision
            == "not-applicable"
        )

        box = IntervalInstance(a=(0, 0, 0), b=(1, 1, 1))
        assert check_gy_necessary(box).decision == "yes"
        assert check_forcible_orderB(box).decision == "yes"

        pt3311 = IntervalInstance(a=(3, 3, 1, 1), b=(3, 3, 1, 1))
        v = check_gy_sufficient(pt3311)
        assert v.decision == "no" and v.failing_t == 2
        v = check_forcible_orderB(pt3311)
        assert v.decision == "no" and v.failing_t == 2

    def test_vacuous_on_odd_point(self):
        pt = IntervalInstance(a=(3, 1, 1), b=(3, 1, 1))
        for checker in (check_gy_necessary, check_gy_sufficient, check_forcible_orderB):
            v = checker(pt)
            assert v.decision == "yes" and v.vacuous

    @given(interval_instances())
    @settings(max_examples=300)
    def test_sandwich(self, inst):
        """Necessary/sufficient tests bracket the exact decision."""
        exact = check_forcible(inst, witness=False).decision == "yes"
        nec = check_gy_necessary(inst)
        suf = check_gy_sufficient(inst)
        if nec.decision == "no":
            assert not exact
        if suf.decision == "yes":
            assert exact
        if exact and nec.decision != "not-applicable":
            assert nec.decision == "yes"

    @given(interval_instances())
    @settings(max_examples=300)
    def test_orderB_matches_exact_when_applicable(self, inst):
        v = check_forcible_orderB(inst)
        if v.decision == "not-applicable":
            assert sort_order_B(inst) is None
            return
        exact = check_forcible(inst, witness=False)
        assert v.decision == exact.decision
