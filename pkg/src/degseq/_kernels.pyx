# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled scans behind the interval deciders.

Same contract as ``degseq._kernels_py``.  The forcible scan avoids a full
sort per ``t``: the pairs are presorted into two streams (entries with
``a >= t`` all share the key ``b + t`` and keep a fixed relative order;
entries with ``a < t`` have the fixed key ``a + b``), and the arrangement
for each ``t`` is recovered by merging the streams.  Total cost is
O(n^2) after an O(n log n) setup.

Accumulations use 64-bit integers; the dispatcher routes inputs that
could overflow to the pure-Python lane instead.
"""

import numpy as np


def forcible_scan(a, b, bint collect=False):
    """Compiled counterpart of ``_kernels_py.forcible_scan``."""
    cdef Py_ssize_t n = len(a)
    if n < 1:
        raise ValueError("sequence must be nonempty")
    A = np.ascontiguousarray(a, dtype=np.int64)
    B = np.ascontiguousarray(b, dtype=np.int64)
    AB = A + B
    # Stream of potential high entries (a >= t): key b + t, so order by
    # b desc, then a + b desc, then index (lexsort is stable).
    OH = np.lexsort((-AB, -B)).astype(np.int64)
    # Stream of low entries (a < t): key a + b, order by a + b desc then
    # b desc then index.
    OL = np.lexsort((-B, -AB)).astype(np.int64)

    cdef long long[::1] av = A
    cdef long long[::1] bv = B
    cdef long long[::1] oh = OH
    cdef long long[::1] ol = OL

    CNT = np.zeros(n + 2, dtype=np.int64)
    NEQ = np.zeros(n + 2, dtype=np.int64)
    SUM = np.zeros(n + 2, dtype=np.int64)
    cdef long long[::1] cnt_ge = CNT
    cdef long long[::1] neq_ge = NEQ
    cdef long long[::1] sum_lt = SUM

    cdef Py_ssize_t i, t, p, ph, pl, picked
    cdef long long v, total_a = 0
    cdef bint a_ne_b = False
    for i in range(n):
        v = av[i] if av[i] < n else n
        cnt_ge[v] += 1
        if av[i] != bv[i]:
            neq_ge[v] += 1
            a_ne_b = True
        if av[i] < n:
            sum_lt[av[i] + 1] += av[i]
        total_a += av[i]
    for t in range(n, -1, -1):
        cnt_ge[t] += cnt_ge[t + 1]
        neq_ge[t] += neq_ge[t + 1]
    for t in range(1, n + 2):
        sum_lt[t] += sum_lt[t - 1]

    SL = np.empty(n, dtype=np.int64)
    cdef long long[::1] sl = SL

    cdef long long fail_t = -1
    cdef long long key_h, key_l, k, pb, pa, pmin, p_neq, run_key, rho
    cdef long long beta, total_min, tail_neq, slack
    cdef Py_ssize_t ih, il
    cdef bint run_has_odd, i2_meets, parity_odd

    for t in range(1, n + 1):
        ph = 0
        pl = 0
        pb = 0
        pa = 0
        pmin = 0
        p_neq = 0
        run_key = -1
        run_has_odd = False
        picked = 0
        while picked < t:
            while ph < n and av[oh[ph]] < t:
                ph += 1
            while pl < n and av[ol[pl]] >= t:
                pl += 1
            if ph >= n:
                i = <Py_ssize_t> ol[pl]
                pl += 1
            elif pl >= n:
                i = <Py_ssize_t> oh[ph]
                ph += 1
            else:
                ih = <Py_ssize_t> oh[ph]
                il = <Py_ssize_t> ol[pl]
                key_h = bv[ih] + t
                key_l = av[il] + bv[il]
                if key_h > key_l:
                    i = ih
                    ph += 1
                else:
                    # On key ties the low entry has the larger b and comes
                    # first in the arrangement.
                    i = il
                    pl += 1
            k = bv[i] + (av[i] if av[i] < t else t)
            if k != run_key:
                run_key = k
                run_has_odd = False
            if (av[i] + bv[i]) & 1:
                run_has_odd = True
            pb += bv[i]
            pa += av[i]
            if av[i] >= t:
                pmin += t
                if av[i] != bv[i]:
                    p_neq += 1
            else:
                pmin += av[i]
            picked += 1
        rho = run_key
        while ph < n and av[oh[ph]] < t:
            ph += 1
        # The remaining high entries are ordered by key descending, so the
        # tie class at position t reaches the tail's high part iff the next
        # high entry still carries the key rho.
        i2_meets = ph < n and bv[oh[ph]] + t == rho
        tail_neq = neq_ge[t] - p_neq
        parity_odd = (pb + total_a - pa) & 1
        if a_ne_b and tail_neq == 0 and parity_odd and not (i2_meets and run_has_odd):
            beta = 1
        else:
            beta = 0
        total_min = t * cnt_ge[t] + sum_lt[t]
        slack = t * (t - 1) + (total_min - pmin) + beta - pb
        sl[t - 1] = slack
        if slack < 0 and fail_t < 0:
            fail_t = t
            if not collect:
                break
    return int(fail_t), ([int(x) for x in SL] if collect else None)


def potential_scan(a, b, bint collect=False):
    """Compiled counterpart of ``_kernels_py.potential_scan``."""
    cdef Py_ssize_t n = len(a)
    if n < 1:
        raise ValueError("sequence must be nonempty")
    A = np.ascontiguousarray(a, dtype=np.int64)
    B = np.ascontiguousarray(b, dtype=np.int64)
    ORDER = np.lexsort((-B, -A))
    AV = np.ascontiguousarray(A[ORDER])
    BV = np.ascontiguousarray(B[ORDER])
    cdef long long[::1] av = AV
    cdef long long[::1] bv = BV

    SL = np.empty(n + 1, dtype=np.int64)
    cdef long long[::1] sl = SL

    cdef long long fail_t = -1
    cdef long long prefix_a = 0, sum_min, jcnt, jsum, bb, alpha_t, slack
    cdef Py_ssize_t t, p
    cdef bint jneq

    for t in range(n + 1):
        sum_min = 0
        jcnt = 0
        jsum = 0
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
        sl[t] = slack
        if slack < 0 and fail_t < 0:
            fail_t = t
            if not collect:
                break
        if t < n:
            prefix_a += av[t]
    return int(fail_t), ([int(x) for x in SL] if collect else None)
