"""Degree sequence primitives: graphicality tests and graph realization.

A sequence of nonnegative integers is *graphic* when it is the degree
sequence of some simple graph (no loops, no parallel edges).  The classic
Erdos-Gallai characterization says a sequence ``d_1 >= ... >= d_n`` with
even sum is graphic iff for every prefix length ``t``::

    sum(d[:t]) <= t*(t-1) + sum(min(t, d[i]) for i in range(t, n))

This module provides the test itself, the per-``t`` slack of the
inequality, and a Havel-Hakimi realization routine that produces an
explicit graph.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "NotGraphicError",
    "SimpleGraph",
    "is_graphic",
    "eg_slack",
    "eg_slacks",
    "realize",
]


class NotGraphicError(ValueError):
    """Raised when a realization is requested for a non-graphic sequence.

    ``reason`` is a short human-readable diagnostic; ``failing_t`` is the
    smallest prefix length at which the Erdos-Gallai inequality fails, or
    ``None`` when the sequence was rejected for an odd sum.
    """

    def __init__(self, reason: str, failing_t: int | None = None):
        super().__init__(reason)
        self.reason = reason
        self.failing_t = failing_t


@dataclass(frozen=True)
class SimpleGraph:
    """A simple undirected graph on vertices ``0..n-1``.

    Edges are stored canonically as ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not canonical for n={self.n}")

    def degree_sequence(self) -> tuple[int, ...]:
        """Return the degree of each vertex, indexed by vertex label."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)


def _validate(d: Sequence[int]) -> list[int]:
    seq = [int(x) for x in d]
    if not seq:
        raise ValueError("degree sequence must be nonempty")
    if any(x < 0 for x in seq):
        raise ValueError("degrees must be nonnegative")
    return seq


def _slack_at(sorted_desc: list[int], prefix: list[int], neg: list[int], t: int) -> int:
    """Erdos-Gallai slack (RHS - LHS) at prefix length ``t``.

    ``sorted_desc`` is the sequence in non-increasing order, ``prefix`` its
    prefix sums, and ``neg`` the negated sequence (ascending) used for
    bisection.  Entries larger than ``n - 1`` are allowed; they simply make
    the slack negative at small ``t``.
    """
    n = len(sorted_desc)
    cnt_ge = bisect_right(neg, -t)          # entries >= t
    m = cnt_ge - t if cnt_ge > t else 0     # tail entries >= t
    tail_min = t * m + (prefix[n] - prefix[t + m])
    return t * (t - 1) + tail_min - prefix[t]


def eg_slacks(d: Sequence[int]) -> list[int]:
    """Return the Erdos-Gallai slack for every ``t`` in ``1..n``.

    The sequence is sorted non-increasingly first (stable, so ties keep
    their input order).  Parity of the degree sum is *not* part of the
    slack; callers that need full graphicality must check it separately.
    """
    seq = _validate(d)
    ds = sorted(seq, reverse=True)
    prefix = [0]
    for x in ds:
        prefix.append(prefix[-1] + x)
    neg = [-x for x in ds]
    return [_slack_at(ds, prefix, neg, t) for t in range(1, len(ds) + 1)]


def eg_slack(d: Sequence[int], t: int) -> int:
    """Slack of the Erdos-Gallai inequality at a single prefix length.

    Raises ``ValueError`` when ``t`` is outside ``1..len(d)``.
    """
    seq = _validate(d)
    if not 1 <= t <= len(seq):
        raise ValueError(f"t must be in 1..{len(seq)}, got {t}")
    ds = sorted(seq, reverse=True)
    prefix = [0]
    for x in ds:
        prefix.append(prefix[-1] + x)
    neg = [-x for x in ds]
    return _slack_at(ds, prefix, neg, t)


def is_graphic(d: Sequence[int]) -> bool:
    """Decide whether ``d`` is the degree sequence of a simple graph.

    Runs in ``O(n log n)``: one sort, then each prefix inequality is
    evaluated with prefix sums and a bisection count.
    """
    seq = _validate(d)
    if sum(seq) % 2:
        return False
    ds = sorted(seq, reverse=True)
    prefix = [0]
    for x in ds:
        prefix.append(prefix[-1] + x)
    neg = [-x for x in ds]
    for t in range(1, len(ds) + 1):
        if _slack_at(ds, prefix, neg, t) < 0:
            return False
    return True


def _reject_reason(seq: list[int]) -> tuple[str, int | None]:
    if sum(seq) % 2:
        return "odd sum", None
    for t, s in enumerate(eg_slacks(seq), start=1):
        if s < 0:
            return f"erdos-gallai inequality fails at t={t}", t
    raise AssertionError("sequence is graphic")  # pragma: no cover


def realize(d: Sequence[int]) -> SimpleGraph:
    """Build a simple graph whose vertex ``i`` has degree ``d[i]``.

    Uses the Havel-Hakimi procedure: repeatedly connect the vertex with
    the largest remaining demand to the next-largest ones.  Raises
    ``NotGraphicError`` when ``d`` is not graphic.
    """
    seq = _validate(d)
    if not is_graphic(seq):
        reason, failing_t = _reject_reason(seq)
        raise NotGraphicError(reason, failing_t)
    n = len(seq)
    remaining = [(deg, v) for v, deg in enumerate(seq)]
    edges: set[tuple[int, int]] = set()
    while True:
        remaining.sort(reverse=True)
        deg, v = remaining[0]
        if deg == 0:
            break
        # deg <= n - 1 is guaranteed by the graphicality check
        for k in range(1, deg + 1):
            dk, u = remaining[k]
            remaining[k] = (dk - 1, u)
            edges.add((u, v) if u < v else (v, u))
        remaining[0] = (0, v)
    return SimpleGraph(n=n, edges=frozenset(edges))
