# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Semantics match ``_pycore`` exactly."""

from libc.math cimport sqrt, fabs
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

import numpy as np

cdef int64_t _LIMIT = (<int64_t>1) << 61


def jacobi_eigh(a, double tol, int max_sweeps):
    cdef Py_ssize_t n = a.shape[0]
    A_arr = np.array(a, dtype=np.float64, order="C", copy=True)
    V_arr = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] A = A_arr
    cdef double[:, ::1] V = V_arr
    cdef Py_ssize_t p, q, k
    cdef double off, scale = 0.0, apq, th, t, c, s, x, y
    cdef int sweeps = 0
    cdef bint converged = False
    for p in range(n):
        for q in range(n):
            scale += A[p, q] * A[p, q]
    scale = sqrt(scale)
    if scale < 1.0:
        scale = 1.0
    while True:
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += A[p, q] * A[p, q]
        if sqrt(off) <= tol * scale:
            converged = True
            break
        if sweeps >= max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                th = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = (1.0 if th >= 0 else -1.0) / (fabs(th) + sqrt(th * th + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    x = A[k, p]
                    y = A[k, q]
                    A[k, p] = c * x - s * y
                    A[k, q] = s * x + c * y
                for k in range(n):
                    x = A[p, k]
                    y = A[q, k]
                    A[p, k] = c * x - s * y
                    A[q, k] = s * x + c * y
                for k in range(n):
                    x = V[k, p]
                    y = V[k, q]
                    V[k, p] = c * x - s * y
                    V[k, q] = s * x + c * y
    w = np.array([A_arr[k, k] for k in range(n)], dtype=np.float64)
    return w, V_arr, sweeps, converged


def descent_length(w, a):
    """int64 greedy descent; raises OverflowError when entries get too large."""
    cdef Py_ssize_t n = len(a)
    cdef int64_t[:, ::1] W = np.array(w, dtype=np.int64)
    cdef int64_t[:, ::1] C = np.array(a, dtype=np.int64)
    cdef Py_ssize_t i, r, j
    cdef int64_t x, wi, amax = 0, wmax
    cdef bint neg, nonzero, found
    for i in range(n):
        for j in range(n):
            if C[i, j] > amax:
                amax = C[i, j]
            if -C[i, j] > amax:
                amax = -C[i, j]
    descents = []
    while True:
        found = False
        for i in range(n):
            neg = True
            nonzero = False
            for r in range(n):
                x = W[r, i]
                if x > 0:
                    neg = False
                    break
                if x != 0:
                    nonzero = True
            if neg and nonzero:
                found = True
                break
        if not found:
            return len(descents), descents
        wmax = 0
        for r in range(n):
            x = W[r, i]
            if x < 0:
                x = -x
            if x > wmax:
                wmax = x
        if wmax > _LIMIT // (amax + 1):
            raise OverflowError("reflection representation exceeds int64 range")
        descents.append(i)
        for r in range(n):
            wi = W[r, i]
            if wi != 0:
                for j in range(n):
                    if j != i and C[i, j] != 0:
                        W[r, j] -= C[i, j] * wi
                        if W[r, j] > _LIMIT or W[r, j] < -_LIMIT:
                            raise OverflowError("reflection representation exceeds int64 range")
                W[r, i] = -wi


cdef struct _Search:
    int n
    int best
    int lower_bound
    unsigned char *finite
    int *blocks
    int *rgs
    int *best_rgs


cdef bint _place(_Search *st, int v, int k) noexcept:
    cdef int b, m, bit, i
    if k >= st.best:
        return False
    if v == st.n:
        st.best = k
        for i in range(st.n):
            st.best_rgs[i] = st.rgs[i]
        return k <= st.lower_bound
    bit = 1 << v
    for b in range(k):
        m = st.blocks[b] | bit
        if st.finite[m]:
            st.blocks[b] = m
            st.rgs[v] = b
            if _place(st, v + 1, k):
                st.blocks[b] = m ^ bit
                return True
            st.blocks[b] = m ^ bit
    if k + 1 < st.best:
        st.blocks[k] = bit
        st.rgs[v] = k
        if _place(st, v + 1, k + 1):
            return True
    return False


def cover_search(finite, int n, int lower_bound):
    cdef bytes fb = bytes(bytearray(finite))
    cdef _Search st
    st.n = n
    st.best = n + 1
    st.lower_bound = lower_bound
    st.finite = <unsigned char *> fb
    st.blocks = <int *> malloc(sizeof(int) * (n + 1))
    st.rgs = <int *> malloc(sizeof(int) * (n + 1))
    st.best_rgs = <int *> malloc(sizeof(int) * (n + 1))
    try:
        _place(&st, 0, 0)
        rgs = [st.best_rgs[i] for i in range(n)] if st.best <= n else None
        return st.best, rgs
    finally:
        free(st.blocks)
        free(st.rgs)
        free(st.best_rgs)
