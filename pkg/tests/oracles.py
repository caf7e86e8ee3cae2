"""Independent reference implementations used as ground truth by the tests.

None of these share code paths with the package: finiteness comes from the
Coxeter bilinear form (numeric eigenvalues), lengths from breadth-first
search over numpy matrices, minimal coverings from brute force over all set
partitions.
"""

import itertools
import math
from collections import deque

import numpy as np

# bond product a_ij * a_ji -> Coxeter exponent m_ij (None = infinity)
_COXETER_M = {0: 2, 1: 3, 2: 4, 3: 6}


def coxeter_form_finite(adj):
    """Finite Weyl group iff the Coxeter form ``-cos(pi / m_ij)`` is positive definite.

    ``adj`` is a square nested sequence of bond products (diagonal ignored).
    """
    n = len(adj)
    if n == 0:
        return True
    b = np.eye(n)
    for i in range(n):
        for j in range(n):
            if i != j:
                m = _COXETER_M.get(adj[i][j])
                b[i, j] = -1.0 if m is None else -math.cos(math.pi / m)
    return bool(np.linalg.eigvalsh(b)[0] > 1e-9)


def set_partitions(n):
    """All restricted growth strings of length ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from rec(prefix, max(top, b))
            prefix.pop()

    yield from rec([0], 0)


class CoverOracle:
    """Brute-force minimum spherical covering with a shared finiteness memo."""

    def __init__(self):
        self._memo = {}
        self._partitions = {}

    def finite(self, adj, part):
        key = tuple(tuple(adj[i][j] for j in part) for i in part)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = coxeter_form_finite(key)
        return hit

    def _masks(self, n):
        hit = self._partitions.get(n)
        if hit is None:
            hit = []
            for rgs in set_partitions(n):
                k = max(rgs) + 1 if rgs else 0
                masks = [sum(1 << v for v in range(n) if rgs[v] == b) for b in range(k)]
                hit.append((k, rgs, masks))
            self._partitions[n] = hit
        return hit

    def min_cover(self, adj):
        """``(r, rgs)`` with ``rgs`` the lexicographically first minimizer."""
        n = len(adj)
        ok = {}
        best, best_rgs = n + 1, None
        for k, rgs, masks in self._masks(n):
            if k >= best:
                continue
            for m in masks:
                if m not in ok:
                    ok[m] = self.finite(adj, [v for v in range(n) if m >> v & 1])
                if not ok[m]:
                    break
            else:
                best, best_rgs = k, rgs
        return best, best_rgs


def bonds_to_adj(n, bonds):
    adj = [[0] * n for _ in range(n)]
    for (i, j), p in bonds.items():
        adj[i - 1][j - 1] = adj[j - 1][i - 1] = p
    return adj


def adj_to_bonds(adj):
    n = len(adj)
    return {(i + 1, j + 1): int(adj[i][j]) for i in range(n) for j in range(i + 1, n) if adj[i][j]}


def _canonical(mats):
    """Smallest upper-triangle code over all vertex permutations, for a stack of adjacency matrices."""
    count, n, _ = mats.shape
    flat = mats.reshape(count, n * n)
    iu = np.triu_indices(n, 1)
    weights = 5 ** np.arange(len(iu[0]) - 1, -1, -1, dtype=np.int64)
    best = None
    for perm in itertools.permutations(range(n)):
        p = np.array(perm)
        cols = p[iu[0]] * n + p[iu[1]]
        codes = flat[:, cols].astype(np.int64) @ weights
        best = codes if best is None else np.minimum(best, codes)
    return best


def _decode(code, n):
    iu = np.triu_indices(n, 1)
    digits = []
    for _ in range(len(iu[0])):
        digits.append(code % 5)
        code //= 5
    digits.reverse()
    adj = np.zeros((n, n), dtype=np.int64)
    adj[iu] = digits
    return adj + adj.T


def connected_diagram_classes(n_max, labels=(1, 2, 3, 4)):
    """Isomorphism-class representatives of connected edge-labelled graphs.

    Returns ``{n: [adjacency matrix, ...]}`` for ``1 <= n <= n_max``.  Each
    connected graph on ``n`` vertices arises by attaching a vertex to a
    connected graph on ``n - 1`` vertices (delete a non-cut vertex), so
    extending all smaller representatives reaches every class.
    """
    out = {1: [np.zeros((1, 1), dtype=np.int64)]}
    choices = (0,) + tuple(labels)
    for n in range(2, n_max + 1):
        edges = np.array([e for e in itertools.product(choices, repeat=n - 1) if any(e)], dtype=np.int8)
        bases = np.array(out[n - 1], dtype=np.int8)
        cands = np.zeros((len(bases), len(edges), n, n), dtype=np.int8)
        cands[:, :, : n - 1, : n - 1] = bases[:, None]
        cands[:, :, n - 1, : n - 1] = edges[None]
        cands[:, :, : n - 1, n - 1] = edges[None]
        cands = cands.reshape(-1, n, n)
        codes = np.unique(_canonical(cands))
        out[n] = [_decode(int(c), n) for c in codes]
    return out


def bfs_weyl_lengths(entries):
    """Minimal word length of every element of a finite Weyl group, keyed by the
    matrix in the same convention as the package (column j = w(alpha_j))."""
    a = np.array(entries, dtype=np.int64)
    n = len(a)
    gens = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= a[i, :]
        s[i, i] = -1
        gens.append(s)
    one = np.eye(n, dtype=np.int64)
    key = lambda m: tuple(map(tuple, m.tolist()))  # noqa: E731
    seen = {key(one): 0}
    queue = deque([one])
    while queue:
        w = queue.popleft()
        d = seen[key(w)]
        for s in gens:
            v = w @ s
            k = key(v)
            if k not in seen:
                seen[k] = d + 1
                queue.append(v)
        if len(seen) > 100_000:
            raise RuntimeError("group too large for breadth-first search")
    return seen
