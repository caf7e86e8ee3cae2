"""Weyl groups of generalized Cartan matrices.

Elements are stored as integer matrices of the reflection representation on
the root lattice, in simple-root coordinates: column ``j`` of ``w`` is
``w(alpha_j)``.  Generators are numbered from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from . import _kernels
from .errors import BadIndexError, InternalError, NotSymmetrizableError, PreconditionFailedError
from .matgrp import Matrix, det
from .ring import Ring

__all__ = [
    "GCM",
    "WeylElement",
    "StraightProfile",
    "simple_reflection_matrix",
    "length",
    "is_finite_type",
    "finite_type_catalog",
    "finite_type_minors",
    "symmetrizer",
    "is_straight",
    "find_straight_candidate",
]


class GCM:
    """Generalized Cartan matrix."""

    __slots__ = ("entries", "n")

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("GCM must be square")
        for i in range(n):
            if rows[i][i] != 2:
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) is not 2")
            for j in range(n):
                if i == j:
                    continue
                if rows[i][j] > 0:
                    raise ValueError(f"entry ({i + 1},{j + 1}) is positive")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise ValueError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) violate a_ij = 0 <=> a_ji = 0")
        self.entries = rows
        self.n = n

    def __eq__(self, other):
        return isinstance(other, GCM) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"GCM({[list(r) for r in self.entries]})"

    def bond(self, i, j):
        """``a_ij * a_ji`` for 1-based ``i != j``."""
        return self.entries[i - 1][j - 1] * self.entries[j - 1][i - 1]

    def restrict(self, vertices):
        """Induced GCM on the given 1-based vertices (in the given order)."""
        idx = [v - 1 for v in vertices]
        return GCM([[self.entries[i][j] for j in idx] for i in idx])

    def components(self):
        """Connected components as sorted lists of 1-based vertices."""
        seen = set()
        out = []
        for s in range(self.n):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i + 1)
                for j in range(self.n):
                    if j not in seen and self.entries[i][j]:
                        seen.add(j)
                        stack.append(j)
            out.append(sorted(comp))
        return out

    def to_json(self):
        return {"n": self.n, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj):
        gcm = cls(obj["entries"])
        if "n" in obj and obj["n"] != gcm.n:
            raise ValueError(f"n = {obj['n']} does not match a {gcm.n}x{gcm.n} matrix")
        return gcm

    @classmethod
    def of_type(cls, name):
        """Standard matrices: ``A3``, ``B2``, ``G2``, ``~A1`` (affine), ..."""
        affine = name.startswith("~")
        kind, rank = name.lstrip("~")[0].upper(), int(name.lstrip("~")[1:])
        if affine:
            if kind != "A" or rank < 1:
                raise ValueError(f"unsupported type {name}")
            if rank == 1:
                return cls([[2, -2], [-2, 2]])
            n = rank + 1
            a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
            for i in range(n):
                a[i][(i + 1) % n] = a[(i + 1) % n][i] = -1
            return cls(a)
        n = rank
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if kind == "A":
            pass
        elif kind == "B" and n >= 2:
            a[n - 1][n - 2] = -2
        elif kind == "C" and n >= 2:
            a[n - 2][n - 1] = -2
        elif kind == "G" and n == 2:
            a[1][0] = -3
        elif kind == "F" and n == 4:
            a[2][1] = -2
        elif kind == "D" and n >= 4:
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        elif kind == "E" and n in (6, 7, 8):
            # chain 1-3-4-5-...-n with 2 attached to 4
            a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
            edges = [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, n)]
            for i, j in edges:
                a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        else:
            raise ValueError(f"unsupported type {name}")
        return cls(a)


def _as_gcm(gcm):
    return gcm if isinstance(gcm, GCM) else GCM(gcm)


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col) if x) for col in cols) for row in a)


def simple_reflection_matrix(gcm, i):
    """Matrix of ``s_i``: ``alpha_j -> alpha_j - a_ij alpha_i`` (``i`` is 1-based)."""
    gcm = _as_gcm(gcm)
    if not isinstance(i, int) or not 1 <= i <= gcm.n:
        raise BadIndexError(f"generator index {i} outside 1..{gcm.n}")
    k = i - 1
    rows = [list(r) for r in _identity(gcm.n)]
    for j in range(gcm.n):
        rows[k][j] = -gcm.entries[k][j] if j != k else -1
    return tuple(tuple(r) for r in rows)


class WeylElement:
    """Element of the Weyl group, with the word it was built from."""

    __slots__ = ("gcm", "word", "matrix")

    def __init__(self, gcm, word, matrix):
        self.gcm = gcm
        self.word = tuple(word)
        self.matrix = matrix

    @classmethod
    def identity(cls, gcm):
        gcm = _as_gcm(gcm)
        return cls(gcm, (), _identity(gcm.n))

    @classmethod
    def from_word(cls, gcm, word):
        gcm = _as_gcm(gcm)
        m = _identity(gcm.n)
        for i in word:
            m = _matmul(m, simple_reflection_matrix(gcm, i))
        return cls(gcm, word, m)

    def _check(self, other):
        if self.gcm != other.gcm:
            raise ValueError("elements of different Weyl groups")

    def __mul__(self, other):
        self._check(other)
        return WeylElement(self.gcm, self.word + other.word, _matmul(self.matrix, other.matrix))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = WeylElement.identity(self.gcm)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        return WeylElement.from_word(self.gcm, self.word[::-1])

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.gcm == other.gcm and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"WeylElement(word={list(self.word)})"

    def is_identity(self):
        return self.matrix == _identity(self.gcm.n)

    def root_image(self, i):
        """``w(alpha_i)`` in simple-root coordinates."""
        return tuple(row[i - 1] for row in self.matrix)

    def descent(self):
        length_, steps = _kernels.descent_length([list(r) for r in self.matrix], self.gcm.entries)
        return length_, [s + 1 for s in steps]

    def length(self):
        return self.descent()[0]

    def reduced_word(self):
        return self.descent()[1][::-1]

    def is_reduced(self):
        return len(self.word) == self.length()

    def to_json(self):
        return {"word": list(self.word), "matrix": [list(r) for r in self.matrix]}


def length(w):
    """Coxeter length by greedy descent: strip simple reflections ``s_i``
    with ``w(alpha_i) < 0`` from the right until the identity is reached."""
    return w.length()


# --------------------------------------------------------------------------
# finite type


def _component_is_finite(gcm, comp):
    m = len(comp)
    if m == 1:
        return True
    edges = []
    for a in range(m):
        for b in range(a + 1, m):
            p = gcm.bond(comp[a], comp[b])
            if p:
                edges.append((a, b, p))
    if any(p >= 4 for _, _, p in edges):
        return False
    if m == 2:
        return True
    if len(edges) != m - 1 or any(p == 3 for _, _, p in edges):
        return False
    deg = [0] * m
    for a, b, _ in edges:
        deg[a] += 1
        deg[b] += 1
    doubles = [(a, b) for a, b, p in edges if p == 2]
    if len(doubles) > 1:
        return False
    if doubles:
        if max(deg) > 2:
            return False
        a, b = doubles[0]
        # B_n / C_n: double bond at an end of the path; F_4: in the middle
        return deg[a] == 1 or deg[b] == 1 or m == 4
    branch = [v for v in range(m) if deg[v] >= 3]
    if not branch:
        return True
    if len(branch) > 1 or deg[branch[0]] > 3:
        return False
    adj = {v: [] for v in range(m)}
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    arms = []
    centre = branch[0]
    for start in adj[centre]:
        prev, cur, k = centre, start, 1
        while len(adj[cur]) == 2:
            prev, cur = cur, adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
            k += 1
        arms.append(k)
    p, q, r = sorted(arms)
    return p == 1 and (q == 1 or (q == 2 and r <= 4))


def finite_type_catalog(gcm):
    """Finite Weyl group test by matching each connected component against
    the list A_n, B_n/C_n, D_n, E_6, E_7, E_8, F_4, G_2."""
    gcm = _as_gcm(gcm)
    return all(_component_is_finite(gcm, comp) for comp in gcm.components())


def symmetrizer(gcm):
    """Positive ``d`` with ``d_i a_ij = d_j a_ji``; raises NotSymmetrizableError."""
    gcm = _as_gcm(gcm)
    a = gcm.entries
    d = [None] * gcm.n
    for comp in gcm.components():
        root = comp[0] - 1
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(gcm.n):
                if j == i or not a[i][j]:
                    continue
                want = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise NotSymmetrizableError(f"cycle through vertices {i + 1} and {j + 1} is not balanced")
    return d


def finite_type_minors(gcm):
    """Finite Weyl group test via exact leading principal minors of the
    symmetrized matrix ``diag(d) @ a``."""
    gcm = _as_gcm(gcm)
    d = symmetrizer(gcm)
    b = [[d[i] * gcm.entries[i][j] for j in range(gcm.n)] for i in range(gcm.n)]
    for k in range(1, gcm.n + 1):
        if det(Matrix(Ring.Q, [row[:k] for row in b[:k]])) <= 0:
            return False
    return True


def is_finite_type(gcm, route="both"):
    """True iff the Weyl group is finite.

    ``route`` is ``"catalog"``, ``"minors"`` or ``"both"``; with ``"both"`` the
    minor test runs whenever the matrix is symmetrizable and must agree.
    """
    gcm = _as_gcm(gcm)
    if route == "catalog":
        return finite_type_catalog(gcm)
    if route == "minors":
        return finite_type_minors(gcm)
    if route != "both":
        raise ValueError(f"unknown route {route!r}")
    verdict = finite_type_catalog(gcm)
    try:
        other = finite_type_minors(gcm)
    except NotSymmetrizableError:
        return verdict
    if other != verdict:
        raise InternalError(f"finite-type routes disagree on {gcm!r}")
    return verdict


# --------------------------------------------------------------------------
# straight elements


@dataclass(frozen=True)
class StraightProfile:
    """``profile[j-1] = length(w^j)`` for ``j = 1..n_max``."""

    element: WeylElement
    straight: bool
    profile: tuple
    degenerate: bool

    def __bool__(self):
        return self.straight

    def to_json(self):
        return {
            "word": list(self.element.word),
            "straight": self.straight,
            "profile": list(self.profile),
            "degenerate": self.degenerate,
        }


def is_straight(w, n_max=20):
    """Check ``length(w^j) = j * length(w)`` for ``j <= n_max``."""
    if n_max < 2:
        raise PreconditionFailedError("n_max must be at least 2")
    lengths = []
    power = w
    for j in range(1, n_max + 1):
        if j > 1:
            power = power * w
        lengths.append(power.length())
    base = lengths[0]
    ok = all(lengths[j - 1] == j * base for j in range(1, n_max + 1))
    return StraightProfile(w, ok, tuple(lengths), base == 0)


def _candidate_words(n, depth):
    for perm in permutations(range(1, n + 1)):
        yield perm
    for k in range(1, depth + 1):
        for word in product(range(1, n + 1), repeat=k):
            if any(word[i] == word[i + 1] for i in range(k - 1)):
                continue
            if k == n and len(set(word)) == n:
                continue
            yield word


def find_straight_candidate(gcm, search_depth=None, n_max=20):
    """First straight element found among Coxeter elements and then words of
    length up to ``search_depth``; ``None`` means the bounded search found
    nothing, not that none exists."""
    gcm = _as_gcm(gcm)
    if is_finite_type(gcm):
        raise PreconditionFailedError("the Weyl group is finite; no straight elements")
    if search_depth is None:
        search_depth = 2 * gcm.n
    for word in _candidate_words(gcm.n, search_depth):
        w = WeylElement.from_word(gcm, word)
        if w.is_identity():
            continue
        prof = is_straight(w, n_max)
        if prof.straight and not prof.degenerate:
            return w
    return None
