"""Scan-kernel contract: both lanes compute identical tables, big ints route."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from degseq import IntervalInstance, check_forcible, check_potential
from degseq._backend import HAVE_COMPILED, fits_compiled, select
from degseq import _kernels_py
from conftest import interval_instances

compiled = pytest.importorskip("degseq._kernels")


class TestLaneAgreement:
    @given(interval_instances(max_n=6, max_bound=6))
    @settings(max_examples=300)
    def test_forcible_scan(self, inst):
        a, b = inst.a, inst.b
        assert compiled.forcible_scan(a, b, True) == _kernels_py.forcible_scan(
            a, b, True
        )
        assert compiled.forcible_scan(a, b, False) == _kernels_py.forcible_scan(
            a, b, False
        )

    @given(interval_instances(max_n=6, max_bound=6))
    @settings(max_examples=300)
    def test_potential_scan(self, inst):
        a, b = inst.a, inst.b
        assert compiled.potential_scan(a, b, True) == _kernels_py.potential_scan(
            a, b, True
        )
        assert compiled.potential_scan(a, b, False) == _kernels_py.potential_scan(
            a, b, False
        )

    def test_scan_types_are_plain_ints(self):
        fail_t, slacks = compiled.forcible_scan((1, 1, 1, 1), (3, 3, 3, 3), True)
        assert type(fail_t) is int
        assert all(type(s) is int for s in slacks)


class TestRouting:
    def test_have_compiled(self):
        assert HAVE_COMPILED

    def test_small_input_routes_compiled(self):
        assert select((1, 2), (3, 4), "auto") is compiled

    def test_huge_values_route_python(self):
        a = b = (2**62, 2**62)
        assert not fits_compiled(a, b)
        assert select(a, b, "auto") is _kernels_py

    def test_explicit_lane_selection(self):
        assert select((1,), (1,), "python") is _kernels_py
        assert select((1,), (1,), "compiled") is compiled
        with pytest.raises(ValueError):
            select((1,), (1,), "fast")

    def test_big_int_decisions(self):
        """Bounds beyond 64-bit accumulation still decide correctly."""
        inst = IntervalInstance(a=(2**62, 2**62), b=(2**62, 2**62))
        verdict = check_forcible(inst)
        assert verdict.decision == "no"
        assert verdict.failing_t == 1
        assert verdict.witness == (2**62, 2**62)
        assert check_potential(inst).decision == "no"
