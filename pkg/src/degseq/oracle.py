"""Ground-truth brute-force deciders and seeded instance generation.

The deciders here are intentionally naive: they enumerate every sequence
in the box (mixed-radix odometer) or every simple graph on ``n`` vertices,
and exist to validate the fast characterizations against first
principles.  Enumeration is guarded by a volume cap (default ``10**7``,
overridable per call or via the ``DEGSEQ_VOLUME_CAP`` environment
variable).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .egcore import is_graphic
from .intervals import IntervalInstance

__all__ = [
    "BoxTooLargeError",
    "InstanceGenConfig",
    "DEFAULT_VOLUME_CAP",
    "VOLUME_CAP_ENV",
    "resolve_volume_cap",
    "iter_box_members",
    "brute_force_forcible",
    "brute_force_potential",
    "sampled_forcible",
    "brute_force_graphic",
    "graphic_multisets",
    "gen_instances",
]

DEFAULT_VOLUME_CAP = 10_000_000
VOLUME_CAP_ENV = "DEGSEQ_VOLUME_CAP"

GAP_PROFILES = ("zero", "tight", "wide", "mixed")


class BoxTooLargeError(RuntimeError):
    """The box volume exceeds the enumeration cap."""


def resolve_volume_cap(cap: int | None = None) -> int:
    """Effective volume cap: explicit value, else env override, else default."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(VOLUME_CAP_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_VOLUME_CAP


def iter_box_members(inst: IntervalInstance) -> Iterator[tuple[int, ...]]:
    """Yield every sequence in the box, odometer order (not parity-filtered)."""
    cur = list(inst.a)
    n = inst.n
    while True:
        yield tuple(cur)
        i = n - 1
        while i >= 0 and cur[i] == inst.b[i]:
            cur[i] = inst.a[i]
            i -= 1
        if i < 0:
            return
        cur[i] += 1


def _check_cap(inst: IntervalInstance, volume_cap: int | None) -> None:
    cap = resolve_volume_cap(volume_cap)
    vol = inst.box_volume()
    if vol > cap:
        raise BoxTooLargeError(f"box volume {vol} exceeds cap {cap}")


def brute_force_forcible(inst: IntervalInstance, *, volume_cap: int | None = None) -> bool:
    """Exhaustively decide whether every even-sum member is graphic.

    Vacuously true when the box holds no even-sum sequence.  Raises
    ``BoxTooLargeError`` when the box volume exceeds the cap.
    """
    _check_cap(inst, volume_cap)
    for member in iter_box_members(inst):
        if sum(member) % 2 == 0 and not is_graphic(member):
            return False
    return True


def brute_force_potential(inst: IntervalInstance, *, volume_cap: int | None = None) -> bool:
    """Exhaustively decide whether some even-sum member is graphic."""
    _check_cap(inst, volume_cap)
    for member in iter_box_members(inst):
        if sum(member) % 2 == 0 and is_graphic(member):
            return True
    return False


def sampled_forcible(inst: IntervalInstance, tries: int, seed: int = 0) -> bool:
    """One-sided sampled forcible check for boxes too large to enumerate.

    Draws ``tries`` uniform members; ``False`` (a counterexample was
    found) is definitive, ``True`` only means no counterexample was
    sampled.  Not exhaustive.
    """
    rng = random.Random(seed)
    for _ in range(tries):
        member = [rng.randint(lo, hi) for lo, hi in zip(inst.a, inst.b)]
        if sum(member) % 2 == 0 and not is_graphic(member):
            return False
    return True


@lru_cache(maxsize=None)
def graphic_multisets(n: int) -> frozenset[tuple[int, ...]]:
    """All sorted degree tuples realized by some simple graph on n vertices.

    Enumerates all ``2**(n*(n-1)/2)`` graphs with Gray-code edge flips, so
    it is limited to ``n <= 7``.
    """
    if not 1 <= n <= 7:
        raise ValueError("graph enumeration supports 1 <= n <= 7")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = len(pairs)
    deg = [0] * n
    found = {tuple(deg)}
    prev = 0
    for k in range(1, 1 << m):
        gray = k ^ (k >> 1)
        bit = gray ^ prev
        prev = gray
        u, v = pairs[bit.bit_length() - 1]
        if gray & bit:
            deg[u] += 1
            deg[v] += 1
        else:
            deg[u] -= 1
            deg[v] -= 1
        found.add(tuple(sorted(deg)))
    return frozenset(found)


def brute_force_graphic(d) -> bool:
    """Decide graphicality by exhaustive search over all simple graphs."""
    seq = sorted(int(x) for x in d)
    if seq and seq[0] < 0:
        raise ValueError("degrees must be nonnegative")
    n = len(seq)
    if n > 7:
        raise ValueError("graph enumeration supports n <= 7")
    if seq and seq[-1] >= n:
        return False
    return tuple(seq) in graphic_multisets(n)


@dataclass(frozen=True)
class InstanceGenConfig:
    """Deterministic instance generator settings.

    ``gap_profile`` controls the spread ``b[i] - a[i]``: ``"zero"`` pins
    every coordinate (``a == b``), ``"tight"`` allows gaps of at most one,
    ``"wide"`` draws both bounds freely, and ``"mixed"`` picks one of the
    three per instance.
    """

    n_range: tuple[int, int]
    bound_max: int
    gap_profile: str = "mixed"
    seed: int = 0

    def __post_init__(self) -> None:
        lo, hi = self.n_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad n_range {self.n_range}")
        if self.bound_max < 0:
            raise ValueError("bound_max must be nonnegative")
        if self.gap_profile not in GAP_PROFILES:
            raise ValueError(f"gap_profile must be one of {GAP_PROFILES}")


def gen_instances(cfg: InstanceGenConfig, count: int) -> Iterator[IntervalInstance]:
    """Yield ``count`` instances, reproducible from ``cfg.seed``."""
    rng = random.Random(cfg.seed)
    for _ in range(count):
        n = rng.randint(*cfg.n_range)
        profile = cfg.gap_profile
        if profile == "mixed":
            profile = rng.choice(("zero", "tight", "wide"))
        a = []
        b = []
        for _ in range(n):
            if profile == "zero":
                v = rng.randint(0, cfg.bound_max)
                lo = hi = v
            elif profile == "tight":
                hi = rng.randint(0, cfg.bound_max)
                lo = max(0, hi - rng.randint(0, 1))
            else:
                x = rng.randint(0, cfg.bound_max)
                y = rng.randint(0, cfg.bound_max)
                lo, hi = min(x, y), max(x, y)
            a.append(lo)
            b.append(hi)
        yield IntervalInstance(tuple(a), tuple(b))
