"""Pure-Python scans behind the interval deciders.

These mirror the compiled kernels in ``degseq._kernels`` and are used when
the extension is not built (or when entries are too large for 64-bit
accumulation).  Both scans return ``(fail_t, slacks)`` where ``fail_t`` is
the smallest prefix length whose inequality is violated (``-1`` when all
hold) and ``slacks`` is the full per-``t`` slack table when ``collect`` is
true, else ``None``.

The forcible scan re-sorts the pairs for every ``t``, so it is quadratic
with an extra log factor and interpreter-bound; build the extension for
large inputs.
"""

from __future__ import annotations

from typing import Sequence


def forcible_scan(
    a: Sequence[int], b: Sequence[int], collect: bool = False
) -> tuple[int, list[int] | None]:
    """Scan the prefix inequalities of the forcible characterization.

    For each ``t`` in ``1..n`` the pairs are arranged by the key
    ``b[i] + min(t, a[i])`` descending (ties: ``b`` descending, then
    ``a + b`` descending, then input index), and the slack

        t*(t-1) + sum(min(t, a) over tail) + beta(t) - sum(b over prefix)

    is computed, where ``beta(t)`` is the parity correction of the
    characterization.
    """
    n = len(a)
    if n < 1:
        raise ValueError("sequence must be nonempty")
    a = [int(x) for x in a]
    b = [int(x) for x in b]
    ab = [a[i] + b[i] for i in range(n)]
    a_ne_b = any(a[i] != b[i] for i in range(n))
    total_a = sum(a)

    # Bucket the lower bounds (clipped to n: only thresholds 1..n matter).
    cnt_ge = [0] * (n + 2)   # will become #{i: a[i] >= t}
    neq_ge = [0] * (n + 2)   # will become #{i: a[i] >= t and a[i] != b[i]}
    sum_lt = [0] * (n + 2)   # will become sum(a[i] for a[i] < t)
    for i in range(n):
        v = a[i] if a[i] < n else n
        cnt_ge[v] += 1
        if a[i] != b[i]:
            neq_ge[v] += 1
        if a[i] < n:
            sum_lt[a[i] + 1] += a[i]
    for t in range(n, -1, -1):
        cnt_ge[t] += cnt_ge[t + 1]
        neq_ge[t] += neq_ge[t + 1]
    for t in range(1, n + 2):
        sum_lt[t] += sum_lt[t - 1]

    slacks: list[int] | None = [] if collect else None
    fail_t = -1
    for t in range(1, n + 1):
        order = sorted(
            range(n),
            key=lambda i: (-(b[i] + (a[i] if a[i] < t else t)), -b[i], -ab[i]),
        )
        pb = pa = pmin = 0
        p_neq_h = 0
        run_key = -1
        run_has_odd = False
        for p in range(t):
            i = order[p]
            k = b[i] + (a[i] if a[i] < t else t)
            if k != run_key:
                run_key = k
                run_has_odd = False
            if ab[i] & 1:
                run_has_odd = True
            pb += b[i]
            pa += a[i]
            if a[i] >= t:
                pmin += t
                if a[i] != b[i]:
                    p_neq_h += 1
            else:
                pmin += a[i]
        rho = run_key
        # Does the tie class at position t reach a tail element with a >= t?
        i2_meets = False
        for p in range(t, n):
            i = order[p]
            if b[i] + (a[i] if a[i] < t else t) != rho:
                break
            if a[i] >= t:
                i2_meets = True
                break
        tail_neq = neq_ge[t] - p_neq_h
        parity_odd = (pb + total_a - pa) & 1
        beta = (
            1
            if (a_ne_b and tail_neq == 0 and parity_odd and not (i2_meets and run_has_odd))
            else 0
        )
        total_min = t * cnt_ge[t] + sum_lt[t]
        slack = t * (t - 1) + (total_min - pmin) + beta - pb
        if collect:
            slacks.append(slack)
        if slack < 0 and fail_t < 0:
            fail_t = t
            if not collect:
                break
    return fail_t, slacks


def potential_scan(
    a: Sequence[int], b: Sequence[int], collect: bool = False
) -> tuple[int, list[int] | None]:
    """Scan the prefix inequalities of the potential characterization.

    The pairs are arranged once by ``a`` descending (ties: ``b``
    descending, then input index); for each ``t`` in ``0..n`` the slack

        t*(t-1) + sum(min(t, b) over tail) - alpha(t) - sum(a over prefix)

    is computed, where ``alpha(t)`` is the parity correction over the tail
    entries with ``b >= t + 1``.
    """
    n = len(a)
    if n < 1:
        raise ValueError("sequence must be nonempty")
    order = sorted(range(n), key=lambda i: (-a[i], -b[i]))
    av = [int(a[i]) for i in order]
    bv = [int(b[i]) for i in order]

    slacks: list[int] | None = [] if collect else None
    fail_t = -1
    prefix_a = 0
    for t in range(n + 1):
        sum_min = 0
        jcnt = jsum = 0
        jneq = False
        for p in range(t, n):
            bb = bv[p]
            sum_min += bb if bb < t else t
            if bb >= t + 1:
                jcnt += 1
                jsum += bb
                if av[p] != bv[p]:
                    jneq = True
        alpha_t = 1 if (not jneq and (jsum + t * jcnt) & 1) else 0
        slack = t * (t - 1) + sum_min - alpha_t - prefix_a
        if collect:
            slacks.append(slack)
        if slack < 0 and fail_t < 0:
            fail_t = t
            if not collect:
                break
        if t < n:
            prefix_a += av[t]
    return fail_t, slacks
