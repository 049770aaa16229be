"""Timing harness for the forcible scan, comparing kernel backends.

Times the full per-``t`` slack table (no early exit) so that a random
instance that fails at a small ``t`` does not trivialize the measurement.
The fitted log-log slope of time against ``n`` estimates the growth
exponent of the scan.
"""

from __future__ import annotations

import math
import random
import time

from . import _backend
from .intervals import IntervalInstance, check_forcible

__all__ = ["bench_instance", "fit_exponent", "run_bench"]


def bench_instance(n: int, seed: int, bound_max: int | None = None) -> IntervalInstance:
    """A reproducible random instance for timing runs."""
    rng = random.Random(seed)
    bm = n if bound_max is None else bound_max
    a = []
    b = []
    for _ in range(n):
        x = rng.randint(0, bm)
        y = rng.randint(0, bm)
        a.append(min(x, y))
        b.append(max(x, y))
    return IntervalInstance(tuple(a), tuple(b))


def fit_exponent(sizes: list[int], seconds: list[float]) -> float:
    """Least-squares slope of log(seconds) against log(n)."""
    xs = [math.log(n) for n in sizes]
    ys = [math.log(max(s, 1e-9)) for s in seconds]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


def run_bench(
    sizes: list[int],
    *,
    trials: int = 3,
    seed: int = 0,
    backend: str = "auto",
    bound_max: int | None = None,
) -> dict:
    """Time the forcible scan at each size and fit a growth exponent.

    ``backend`` may be ``auto``, ``compiled``, ``python`` or ``both``;
    ``both`` produces one timing lane per available kernel.  Returns a
    JSON-ready report with per-size rows (best and mean seconds over the
    trials) and a fitted exponent per lane.
    """
    if backend == "both":
        lanes = ["compiled", "python"] if _backend.HAVE_COMPILED else ["python"]
    elif backend == "auto":
        lanes = [_backend.backend_name()]
    else:
        lanes = [backend]
    rows = []
    exponents = {}
    for lane in lanes:
        lane_best = []
        for n in sizes:
            times = []
            for trial in range(trials):
                inst = bench_instance(
                    n, seed=seed * 1_000_003 + n * 101 + trial, bound_max=bound_max
                )
                start = time.perf_counter()
                check_forcible(inst, backend=lane, explain=True, witness=False)
                times.append(time.perf_counter() - start)
            best = min(times)
            lane_best.append(best)
            rows.append(
                {
                    "backend": lane,
                    "n": n,
                    "best_seconds": best,
                    "mean_seconds": sum(times) / len(times),
                    "trials": trials,
                }
            )
        if len(sizes) >= 2:
            exponents[lane] = fit_exponent(sizes, lane_best)
    return {
        "sizes": list(sizes),
        "trials": trials,
        "seed": seed,
        "bound_max": bound_max,
        "have_compiled": _backend.HAVE_COMPILED,
        "rows": rows,
        "exponents": exponents,
    }
