# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel backend: int64 inner loops for the hot per-q recurrences.

Inputs are validated against conservative magnitude bounds so that every
intermediate stays far below 2**63; on violation an OverflowError asks the
caller to fall back to the pure-Python backend (arbitrary precision).
"""

import numpy as np

# |s| stays below VEC_GUARD, matrix entries below MAT_GUARD, and
# classes*dim below FAN_GUARD, so projections stay below
# VEC_GUARD * MAT_GUARD * FAN_GUARD < 2**59.
DEF VEC_GUARD_BITS = 41
cdef long long VEC_GUARD = (<long long>1) << VEC_GUARD_BITS
cdef long long MAT_GUARD = 1 << 12
cdef long long FAN_GUARD = 1 << 6


def sl2_multiplicity_series(trace_mats, proj_mats, long long group_order, long long qmax):
    """See the pure-Python backend for the contract."""
    T = np.ascontiguousarray(np.asarray(trace_mats, dtype=np.int64))
    P = np.ascontiguousarray(np.asarray(proj_mats, dtype=np.int64))
    cdef Py_ssize_t n_classes = T.shape[0]
    cdef Py_ssize_t dim = T.shape[1]
    cdef Py_ssize_t n_irr = P.shape[0]
    if np.abs(T).max() >= MAT_GUARD or np.abs(P).max() >= MAT_GUARD:
        raise OverflowError("kernel input magnitudes too large; use the python backend")
    if n_classes * dim >= FAN_GUARD * 64:
        raise OverflowError("kernel fan-in too large; use the python backend")

    cdef long long[:, :, ::1] Tv = T
    cdef long long[:, :, :, ::1] Pv = P
    s_prev_arr = np.zeros((n_classes, dim), dtype=np.int64)
    s_cur_arr = np.zeros((n_classes, dim), dtype=np.int64)
    s_cur_arr[:, 0] = 1
    s_tmp_arr = np.zeros((n_classes, dim), dtype=np.int64)
    out_arr = np.zeros((qmax + 1, n_irr), dtype=np.int64)
    cdef long long[:, ::1] sp = s_prev_arr
    cdef long long[:, ::1] sc = s_cur_arr
    cdef long long[:, ::1] st = s_tmp_arr
    cdef long long[:, ::1] out = out_arr
    cdef long long[:, ::1] swap
    cdef Py_ssize_t q, c, i, j, k
    cdef long long acc, head

    for q in range(qmax + 1):
        if q > 0:
            for c in range(n_classes):
                for i in range(dim):
                    acc = 0
                    for j in range(dim):
                        acc += Tv[c, i, j] * sc[c, j]
                    acc -= sp[c, i]
                    if acc >= VEC_GUARD or acc <= -VEC_GUARD:
                        raise OverflowError(
                            "recurrence values exceed the int64 guard; use the python backend"
                        )
                    st[c, i] = acc
            swap = sp
            sp = sc
            sc = st
            st = swap
        for i in range(n_irr):
            head = 0
            for k in range(dim):
                acc = 0
                for c in range(n_classes):
                    for j in range(dim):
                        acc += Pv[i, c, k, j] * sc[c, j]
                if k == 0:
                    head = acc
                elif acc != 0:
                    raise ValueError(
                        f"multiplicity is not rational at q={q}, irreducible {i}"
                    )
            if head % group_order != 0 or head < 0:
                raise ValueError(
                    f"multiplicity is not a nonnegative integer at q={q}, irreducible {i}"
                )
            out[q, i] = head // group_order
    return out_arr.tolist()


def weight_slice_counts(long long n, long long w1, long long w2, long long qmax):
    """See the pure-Python backend for the contract."""
    out_arr = np.zeros((qmax + 1, n), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef long long q, x, r
    cdef long long a = w1 % n
    cdef long long b = w2 % n
    cdef long long step = a - b
    for q in range(qmax + 1):
        r = (b * q) % n
        for x in range(q + 1):
            out[q, r] += 1
            r += step
            if r >= n:
                r -= n
            elif r < 0:
                r += n
    return out_arr.tolist()


def weight_slice_count(long long n, long long w1, long long w2, long long t, long long q):
    """See the pure-Python backend for the contract."""
    cdef long long a = w1 % n
    cdef long long b = w2 % n
    cdef long long target = t % n
    cdef long long count = 0
    cdef long long x, r
    r = (b * q) % n
    cdef long long step = a - b
    for x in range(q + 1):
        if r == target:
            count += 1
        r += step
        if r >= n:
            r -= n
        elif r < 0:
            r += n
    return count
