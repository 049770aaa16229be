"""Deciders for interval-constrained degree sequences.

An instance is a pair of componentwise bounds ``a[i] <= b[i]``.  The
*universe* of the instance is the set of integer sequences ``d`` with
``a[i] <= d[i] <= b[i]`` and even sum (only even-sum sequences can be
degree sequences).  Two questions are decided here:

* **potential**: does the universe contain at least one graphic sequence?
* **forcible**: is every sequence in the universe graphic?

Both are characterized by families of prefix inequalities over suitable
arrangements of the bound pairs, evaluated in ``check_potential`` and
``check_forcible``.  Weaker necessary / sufficient conditions for the
forcible question, and an exact forcible test that applies only when the
pairs admit a doubly monotone arrangement, are provided as cross-checks
(``check_gy_necessary``, ``check_gy_sufficient``, ``check_forcible_orderB``).

When the forcible answer is "no", ``find_witness`` produces an explicit
non-graphic even-sum member of the universe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _backend
from .egcore import is_graphic

__all__ = [
    "IntervalInstance",
    "OrderedView",
    "AlphaContext",
    "OrderBContext",
    "BetaContext",
    "Verdict",
    "WitnessNotFoundError",
    "sort_order_A",
    "sort_order_B",
    "sort_order_Ot",
    "alpha",
    "alpha_context",
    "order_b_context",
    "beta_context",
    "check_potential",
    "check_gy_necessary",
    "check_gy_sufficient",
    "check_forcible_orderB",
    "check_forcible",
    "find_witness",
]


class WitnessNotFoundError(RuntimeError):
    """No counterexample could be produced within the volume cap."""


@dataclass(frozen=True)
class IntervalInstance:
    """Componentwise bounds ``0 <= a[i] <= b[i]`` on a degree sequence."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b):
            raise ValueError("bound sequences must have equal length")
        if not a:
            raise ValueError("bound sequences must be nonempty")
        for i, (lo, hi) in enumerate(zip(a, b)):
            if lo < 0:
                raise ValueError(f"lower bound at index {i} is negative")
            if lo > hi:
                raise ValueError(f"bounds at index {i} are crossed: {lo} > {hi}")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def is_point(self) -> bool:
        """True when the bounds pin a single sequence."""
        return self.a == self.b

    @property
    def universe_empty(self) -> bool:
        """True when no even-sum sequence fits the bounds.

        This happens exactly for pointlike instances with odd sum: any
        coordinate with ``a[i] < b[i]`` can absorb the parity.
        """
        return self.is_point and sum(self.a) % 2 == 1

    def box_volume(self) -> int:
        """Number of integer sequences within the bounds (any parity)."""
        return math.prod(hi - lo + 1 for lo, hi in zip(self.a, self.b))

    def contains(self, seq: Sequence[int]) -> bool:
        """True when ``seq`` lies componentwise within the bounds."""
        if len(seq) != self.n:
            return False
        return all(lo <= x <= hi for lo, x, hi in zip(self.a, seq, self.b))


@dataclass(frozen=True)
class OrderedView:
    """The bound pairs rearranged by one of the canonical orders.

    ``perm[p]`` is the input index placed at view position ``p`` (0-based);
    ``a`` and ``b`` are the rearranged bounds.  ``kind`` is ``"A"``, ``"B"``
    or ``"O"``; views of kind ``"O"`` also carry the prefix length ``t``
    their sort key depends on.
    """

    kind: str
    t: int | None
    perm: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]

    def key(self, p: int) -> int:
        """Sort key ``b + min(t, a)`` of view position ``p`` (kind O only)."""
        if self.kind != "O":
            raise ValueError("keys are defined for kind-O views only")
        return self.b[p] + min(self.t, self.a[p])

    def check_chain(self) -> bool:
        """Verify the adjacent-pair invariant of the view's order kind."""
        n = len(self.a)
        a, b = self.a, self.b
        if self.kind == "A":
            return all(
                a[p] > a[p + 1] or (a[p] == a[p + 1] and b[p] >= b[p + 1])
                for p in range(n - 1)
            )
        if self.kind == "B":
            return all(
                a[p] >= a[p + 1] and a[p] + b[p] >= a[p + 1] + b[p + 1]
                for p in range(n - 1)
            )
        if self.kind == "O":
            for p in range(n - 1):
                k0, k1 = self.key(p), self.key(p + 1)
                if k0 > k1:
                    continue
                if k0 < k1:
                    return False
                if b[p] > b[p + 1]:
                    continue
                if b[p] < b[p + 1]:
                    return False
                if a[p] + b[p] < a[p + 1] + b[p + 1]:
                    return False
            return True
        raise ValueError(f"unknown view kind {self.kind!r}")

    def check_sort_invariant(self) -> bool:
        """Dominance invariant of kind-O views.

        For positions ``i < j``: ``b[i] >= min(a[j] + 1, b[j]) >= a[j]``,
        and within the tie class of position ``t`` every ``b`` is at least
        every ``a``.
        """
        if self.kind != "O":
            raise ValueError("the sort invariant applies to kind-O views only")
        n = len(self.a)
        a, b = self.a, self.b
        cap = [min(a[j] + 1, b[j]) for j in range(n)]
        # min(a+1, b) >= a holds for every valid pair; check b against the
        # largest cap to its right.
        suffix_max = [0] * (n + 1)
        for j in range(n - 1, -1, -1):
            suffix_max[j] = max(cap[j], suffix_max[j + 1])
        running_b = None
        for i in range(n - 1):
            running_b = b[i] if running_b is None else min(running_b, b[i])
            if running_b < suffix_max[i + 1]:
                return False
        rho = self.key(self.t - 1)
        tie = [p for p in range(n) if self.key(p) == rho]
        if tie and min(b[p] for p in tie) < max(a[p] for p in tie):
            return False
        return True


def _view(inst: IntervalInstance, kind: str, t: int | None, order: list[int]) -> OrderedView:
    return OrderedView(
        kind=kind,
        t=t,
        perm=tuple(order),
        a=tuple(inst.a[i] for i in order),
        b=tuple(inst.b[i] for i in order),
    )


def sort_order_A(inst: IntervalInstance) -> OrderedView:
    """Arrange pairs by ``a`` descending, ties by ``b`` descending.

    This order always exists; remaining ties keep input order.
    """
    order = sorted(range(inst.n), key=lambda i: (-inst.a[i], -inst.b[i]))
    return _view(inst, "A", None, order)


def sort_order_B(inst: IntervalInstance) -> OrderedView | None:
    """Arrange pairs so that both ``a`` and ``a + b`` are non-increasing.

    Such an arrangement may not exist; ``None`` is returned in that case.
    The canonical candidate sorts by ``a`` descending, ties by ``a + b``
    descending: within an equal-``a`` block the ``a + b`` chain can always
    be made non-increasing, so the arrangement exists iff the canonical
    candidate satisfies both chains.
    """
    a, b = inst.a, inst.b
    order = sorted(range(inst.n), key=lambda i: (-a[i], -(a[i] + b[i])))
    for p in range(inst.n - 1):
        i, j = order[p], order[p + 1]
        if a[i] + b[i] < a[j] + b[j]:
            return None
    return _view(inst, "B", None, order)


def sort_order_Ot(inst: IntervalInstance, t: int) -> OrderedView:
    """Arrange pairs by ``b + min(t, a)`` descending.

    Ties are broken by ``b`` descending, then ``a + b`` descending, then
    input index ascending, which makes the arrangement deterministic.
    Requires ``1 <= t <= n``.
    """
    if not 1 <= t <= inst.n:
        raise ValueError(f"t must be in 1..{inst.n}, got {t}")
    a, b = inst.a, inst.b
    order = sorted(
        range(inst.n),
        key=lambda i: (-(b[i] + min(t, a[i])), -b[i], -(a[i] + b[i])),
    )
    return _view(inst, "O", t, order)


@dataclass(frozen=True)
class AlphaContext:
    """Parity data of the potential characterization at prefix length ``t``.

    ``j`` holds the 0-based view positions ``p >= t`` with ``b[p] >= t+1``
    under the kind-A view; ``alpha`` is 1 when all those pairs are pinned
    (``a == b``) and their ``b``-sum plus ``t * len(j)`` is odd.
    """

    t: int
    view: OrderedView
    j: tuple[int, ...]
    alpha: int


def alpha_context(inst: IntervalInstance, t: int) -> AlphaContext:
    """Build the parity context of the potential test at ``t`` (0..n)."""
    if not 0 <= t <= inst.n:
        raise ValueError(f"t must be in 0..{inst.n}, got {t}")
    view = sort_order_A(inst)
    j = tuple(p for p in range(t, inst.n) if view.b[p] >= t + 1)
    pinned = all(view.a[p] == view.b[p] for p in j)
    parity = (sum(view.b[p] for p in j) + t * len(j)) % 2
    return AlphaContext(t=t, view=view, j=j, alpha=1 if pinned and parity else 0)


def alpha(inst: IntervalInstance, t: int) -> int:
    """Parity correction of the potential characterization at ``t``."""
    return alpha_context(inst, t).alpha


@dataclass(frozen=True)
class OrderBContext:
    """Correction terms used by the order-B tests at prefix length ``t``.

    ``j`` and ``xi`` drive the necessary/sufficient pair of tests;
    ``j_prime`` and ``beta_prime`` drive the exact order-B forcible test.
    Positions are 0-based into the kind-B view.
    """

    t: int
    j: tuple[int, ...]
    xi: int
    j_prime: tuple[int, ...]
    beta_prime: int


def order_b_context(view: OrderedView, a_ne_b: bool, t: int) -> OrderBContext:
    """Compute the order-B correction terms at ``t`` for a kind-B view."""
    n = len(view.a)
    a, b = view.a, view.b
    j = tuple(p for p in range(t, n) if b[p] >= t + 1)
    gap_in_j = any(a[p] < b[p] for p in j)
    parity_j = (sum(b[p] for p in j) + t * len(j)) % 2
    xi = 1 if (gap_in_j or parity_j) else 0
    j_prime = tuple(p for p in range(t, n) if a[p] >= t)
    pinned = all(a[p] == b[p] for p in j_prime)
    parity = (sum(b[:t]) + sum(a[t:])) % 2
    beta_prime = 1 if (a_ne_b and pinned and parity) else 0
    return OrderBContext(t=t, j=j, xi=xi, j_prime=j_prime, beta_prime=beta_prime)


@dataclass(frozen=True)
class BetaContext:
    """Parity data of the forcible characterization at prefix length ``t``.

    All positions are 0-based into the kind-O view for the same ``t``:
    ``i1`` is the prefix ``0..t-1``; ``i2``/``i3`` split the tail by
    ``a >= t`` / ``a < t``; ``jstar`` is the tie class sharing the key
    ``rho`` of position ``t - 1``.
    """

    t: int
    view: OrderedView
    rho: int
    jstar: tuple[int, ...]
    i1: tuple[int, ...]
    i2: tuple[int, ...]
    i3: tuple[int, ...]
    beta: int


def beta_context(inst: IntervalInstance, t: int) -> BetaContext:
    """Build the parity context of the forcible test at ``t`` (1..n)."""
    view = sort_order_Ot(inst, t)
    n = inst.n
    a, b = view.a, view.b
    rho = view.key(t - 1)
    jstar = tuple(p for p in range(n) if view.key(p) == rho)
    i1 = tuple(range(t))
    i2 = tuple(p for p in range(t, n) if a[p] >= t)
    i3 = tuple(p for p in range(t, n) if a[p] < t)
    beta = 0
    if (
        not inst.is_point
        and all(a[p] == b[p] for p in i2)
        and (sum(b[p] for p in i1) + sum(a[p] for p in range(t, n))) % 2 == 1
    ):
        jstar_set = set(jstar)
        if any(p in jstar_set for p in i2):
            if all((a[p] + b[p]) % 2 == 0 for p in i1 if p in jstar_set):
                beta = 1
        else:
            beta = 1
    return BetaContext(
        t=t, view=view, rho=rho, jstar=jstar, i1=i1, i2=i2, i3=i3, beta=beta
    )


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decider.

    ``decision`` is ``"yes"``, ``"no"`` or ``"not-applicable"``.  On
    ``"no"``, ``failing_t`` is the smallest prefix length whose inequality
    is violated.  ``vacuous`` marks a "yes" that holds because the
    universe of the instance is empty.  ``slacks`` carries the per-``t``
    slack table when requested (forcible-style tests start at t=1,
    potential-style tests at t=0).  ``witness`` and ``witness_method``
    describe a counterexample when one was constructed.
    """

    decision: str
    failing_t: int | None = None
    witness: tuple[int, ...] | None = None
    vacuous: bool = False
    slacks: tuple[int, ...] | None = None
    witness_method: str | None = None

    def __post_init__(self) -> None:
        if self.decision not in ("yes", "no", "not-applicable"):
            raise ValueError(f"bad decision {self.decision!r}")
        if self.decision == "no" and self.failing_t is None:
            raise ValueError("a 'no' verdict must carry failing_t")


def check_potential(
    inst: IntervalInstance, *, backend: str = "auto", explain: bool = False
) -> Verdict:
    """Decide whether some even-sum sequence within the bounds is graphic.

    Evaluates the prefix inequalities of the potential characterization
    for ``t = 0..n`` over the kind-A arrangement.  An instance whose
    universe is empty fails at ``t = 0``.
    """
    kernel = _backend.select(inst.a, inst.b, backend)
    fail_t, slacks = kernel.potential_scan(inst.a, inst.b, explain)
    table = tuple(slacks) if explain else None
    if fail_t < 0:
        return Verdict("yes", slacks=table)
    return Verdict("no", failing_t=fail_t, slacks=table)


def check_forcible(
    inst: IntervalInstance,
    *,
    backend: str = "auto",
    explain: bool = False,
    witness: bool = True,
    volume_cap: int | None = None,
) -> Verdict:
    """Decide whether every even-sum sequence within the bounds is graphic.

    Evaluates the prefix inequalities of the forcible characterization
    for ``t = 1..n``, each over its own kind-O arrangement.  An instance
    with an empty universe is vacuously forcible and is reported as
    ``yes`` with ``vacuous=True``.  On ``no``, a counterexample is
    attached unless ``witness=False``.
    """
    if inst.universe_empty:
        return Verdict("yes", vacuous=True)
    kernel = _backend.select(inst.a, inst.b, backend)
    fail_t, slacks = kernel.forcible_scan(inst.a, inst.b, explain)
    table = tuple(slacks) if explain else None
    if fail_t < 0:
        return Verdict("yes", slacks=table)
    w = None
    method = None
    if witness:
        try:
            w, method = _witness_with_method(inst, fail_t, volume_cap=volume_cap)
        except WitnessNotFoundError:
            method = "failed"
    return Verdict(
        "no",
        failing_t=fail_t,
        witness=tuple(w) if w is not None else None,
        slacks=table,
        witness_method=method,
    )


def _scan_order_b(
    inst: IntervalInstance, t_start: int, bonus, explain: bool
) -> Verdict:
    """Shared driver for the three order-B tests.

    ``bonus(ctx)`` maps the per-``t`` context to the additive correction
    on the right-hand side.  Returns not-applicable when no kind-B
    arrangement exists and a vacuous yes when the universe is empty.
    """
    view = sort_order_B(inst)
    if view is None:
        return Verdict("not-applicable")
    if inst.universe_empty:
        return Verdict("yes", vacuous=True)
    n = inst.n
    a, b = view.a, view.b
    a_ne_b = not inst.is_point
    prefix_b = sum(b[:t_start])
    slacks = [] if explain else None
    fail_t = None
    for t in range(t_start, n + 1):
        ctx = order_b_context(view, a_ne_b, t)
        tail_min = sum(x if x < t else t for x in a[t:])
        slack = t * (t - 1) + tail_min + bonus(ctx) - prefix_b
        if explain:
            slacks.append(slack)
        if slack < 0 and fail_t is None:
            fail_t = t
            if not explain:
                break
        if t < n:
            prefix_b += b[t]
    table = tuple(slacks) if explain else None
    if fail_t is None:
        return Verdict("yes", slacks=table)
    return Verdict("no", failing_t=fail_t, slacks=table)


def check_gy_necessary(inst: IntervalInstance, *, explain: bool = False) -> Verdict:
    """Necessary condition for the forcible question (order-B test).

    A forcible instance always passes; a failing instance is definitely
    not forcible.  Not applicable when no kind-B arrangement exists.
    """
    shift = 2 if not inst.is_point else 0
    return _scan_order_b(inst, 0, lambda ctx: shift - ctx.xi, explain)


def check_gy_sufficient(inst: IntervalInstance, *, explain: bool = False) -> Verdict:
    """Sufficient condition for the forcible question (order-B test).

    A passing instance is definitely forcible; a failing one may still be
    forcible.  Not applicable when no kind-B arrangement exists.
    """
    shift = 1 if not inst.is_point else 0
    return _scan_order_b(inst, 0, lambda ctx: shift - ctx.xi, explain)


def check_forcible_orderB(inst: IntervalInstance, *, explain: bool = False) -> Verdict:
    """Exact forcible test restricted to kind-B-arrangeable instances.

    Agrees with ``check_forcible`` whenever it is applicable.
    """
    return _scan_order_b(inst, 1, lambda ctx: ctx.beta_prime, explain)


def _unpermute(values: Sequence[int], perm: Sequence[int]) -> list[int]:
    out = [0] * len(values)
    for p, i in enumerate(perm):
        out[i] = values[p]
    return out


def _verified(inst: IntervalInstance, seq: list[int]) -> bool:
    return inst.contains(seq) and sum(seq) % 2 == 0 and not is_graphic(seq)


def _construct_witness(inst: IntervalInstance, t: int) -> list[int] | None:
    """Direct counterexample construction at a failing prefix length.

    In view coordinates the base candidate takes ``b`` on the prefix and
    ``a`` on the tail; its top-``t`` degree sum exceeds what any simple
    graph allows.  If the base has odd sum, one coordinate is nudged
    within its bounds to fix parity while keeping the overload: bump a
    loose tail pair (``a < b``), or drop a loose prefix pair, preferring
    moves that do not reduce the overload below one.
    """
    ctx = beta_context(inst, t)
    view = ctx.view
    n = inst.n
    a, b = view.a, view.b
    base = [b[p] if p < t else a[p] for p in range(n)]
    candidates: list[list[int]] = []
    if sum(base) % 2 == 0:
        candidates.append(base)
    else:
        jstar_set = set(ctx.jstar)
        # A loose pair in the high tail: raising it leaves every tail
        # minimum at t, so the overload is untouched.
        for p in ctx.i2:
            if a[p] < b[p]:
                cand = list(base)
                cand[p] += 1
                candidates.append(cand)
                break
        # A prefix member of the tie class with odd a+b: dropping it to its
        # lower bound trades against a tail tie-class partner, preserving
        # the overload.
        if any(p in jstar_set for p in ctx.i2):
            for p in ctx.i1:
                if p in jstar_set and (a[p] + b[p]) % 2 == 1:
                    cand = list(base)
                    cand[p] = a[p]
                    candidates.append(cand)
                    break
        # Loose pairs elsewhere cost one unit of overload; they are valid
        # whenever the violation was by at least two.
        for p in ctx.i3:
            if a[p] < b[p]:
                cand = list(base)
                cand[p] += 1
                candidates.append(cand)
                break
        for p in ctx.i1:
            if a[p] < b[p]:
                cand = list(base)
                cand[p] -= 1
                candidates.append(cand)
                break
    for cand in candidates:
        seq = _unpermute(cand, view.perm)
        if _verified(inst, seq):
            return seq
    return None


def _exhaustive_witness(inst: IntervalInstance, volume_cap: int | None) -> list[int]:
    """Enumerate the box for a counterexample (guarded by the volume cap)."""
    from .oracle import BoxTooLargeError, iter_box_members, resolve_volume_cap

    cap = resolve_volume_cap(volume_cap)
    if inst.box_volume() > cap:
        raise WitnessNotFoundError(
            f"construction failed and box volume {inst.box_volume()} exceeds cap {cap}"
        )
    for member in iter_box_members(inst):
        if sum(member) % 2 == 0 and not is_graphic(member):
            return list(member)
    raise WitnessNotFoundError("box contains no non-graphic even-sum sequence")


def _witness_with_method(
    inst: IntervalInstance, t: int, volume_cap: int | None = None
) -> tuple[list[int], str]:
    seq = _construct_witness(inst, t)
    if seq is not None:
        return seq, "construction"
    return _exhaustive_witness(inst, volume_cap), "exhaustive"


def find_witness(
    inst: IntervalInstance, t: int, *, volume_cap: int | None = None
) -> list[int]:
    """Produce a non-graphic even-sum sequence within the bounds.

    ``t`` must be a prefix length at which ``check_forcible`` reported a
    violation; ``ValueError`` is raised otherwise.  Falls back to
    exhaustive enumeration (bounded by the volume cap) if the direct
    construction fails, and raises ``WitnessNotFoundError`` when the box
    is too large to enumerate.
    """
    if not 1 <= t <= inst.n:
        raise ValueError(f"t must be in 1..{inst.n}, got {t}")
    ctx = beta_context(inst, t)
    view = ctx.view
    lhs = sum(view.b[:t])
    rhs = t * (t - 1) + sum(x if x < t else t for x in view.a[t:]) + ctx.beta
    if lhs <= rhs:
        raise ValueError(f"the forcible inequality is not violated at t={t}")
    seq, _ = _witness_with_method(inst, t, volume_cap=volume_cap)
    return seq
