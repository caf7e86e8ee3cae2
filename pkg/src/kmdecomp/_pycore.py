"""Pure-Python kernels.  ``_core.pyx`` implements the same functions."""

import math

import numpy as np


def jacobi_eigh(a, tol, max_sweeps):
    """Cyclic Jacobi eigen-iteration on a real symmetric matrix.

    Returns ``(w, v, sweeps, converged)`` with eigenvalues ``w`` and
    eigenvectors in the columns of ``v``.  Convergence means the off-diagonal
    Frobenius norm fell to ``tol * max(1, ||a||_F)``.
    """
    n = a.shape[0]
    A = [[float(a[i, j]) for j in range(n)] for i in range(n)]
    V = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    scale = max(1.0, math.sqrt(sum(x * x for row in A for x in row)))
    sweeps = 0
    converged = False
    while True:
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += A[p][q] * A[p][q]
        if math.sqrt(off) <= tol * scale:
            converged = True
            break
        if sweeps >= max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p][q]
                if apq == 0.0:
                    continue
                th = (A[q][q] - A[p][p]) / (2.0 * apq)
                t = (1.0 if th >= 0 else -1.0) / (abs(th) + math.sqrt(th * th + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = A[k][p], A[k][q]
                    A[k][p] = c * akp - s * akq
                    A[k][q] = s * akp + c * akq
                rp, rq = A[p], A[q]
                for k in range(n):
                    apk, aqk = rp[k], rq[k]
                    rp[k] = c * apk - s * aqk
                    rq[k] = s * apk + c * aqk
                for k in range(n):
                    vkp, vkq = V[k][p], V[k][q]
                    V[k][p] = c * vkp - s * vkq
                    V[k][q] = s * vkp + c * vkq
    w = np.array([A[i][i] for i in range(n)], dtype=float)
    return w, np.array(V, dtype=float), sweeps, converged


def descent_length(w, a):
    """Greedy descent length of a Weyl group element.

    ``w`` holds the reflection-representation matrix as a list of rows (it is
    consumed); ``a`` is the generalized Cartan matrix.  Returns
    ``(length, descents)`` where ``descents`` lists the 0-based generators
    stripped off the right, in order.
    """
    n = len(a)
    descents = []
    while True:
        for i in range(n):
            neg = True
            nonzero = False
            for r in range(n):
                x = w[r][i]
                if x > 0:
                    neg = False
                    break
                if x:
                    nonzero = True
            if neg and nonzero:
                break
        else:
            return len(descents), descents
        descents.append(i)
        ai = a[i]
        for r in range(n):
            row = w[r]
            wi = row[i]
            if wi:
                for j in range(n):
                    if j != i and ai[j]:
                        row[j] -= ai[j] * wi
                row[i] = -wi


def cover_search(finite, n, lower_bound):
    """Branch and bound for a minimum partition into ``finite`` subsets.

    ``finite[mask]`` is truthy when the vertex set ``mask`` is spherical (the
    property is hereditary).  Partitions are explored as restricted growth
    strings in lexicographic order and only strict improvements are kept, so
    the result is the lexicographically smallest minimizer.  Returns
    ``(r, rgs)``.
    """
    best = [n + 1, None]
    blocks = []
    rgs = [0] * n

    def place(v):
        k = len(blocks)
        if k >= best[0]:
            return False
        if v == n:
            best[0] = k
            best[1] = list(rgs)
            return k <= lower_bound
        bit = 1 << v
        for b in range(k):
            m = blocks[b] | bit
            if finite[m]:
                blocks[b] = m
                rgs[v] = b
                done = place(v + 1)
                blocks[b] = m ^ bit
                if done:
                    return True
        if k + 1 < best[0]:
            blocks.append(bit)
            rgs[v] = k
            done = place(v + 1)
            blocks.pop()
            if done:
                return True
        return False

    place(0)
    return best[0], best[1]
