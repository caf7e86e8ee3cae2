"""Dynkin diagrams, minimal spherical coverings and the (KUK)^(r+1) bound.

A spherical covering is a partition of the vertices into parts that each
induce a finite-type subdiagram.  Parts need not be connected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .coxeter import GCM, is_finite_type
from .errors import InternalError

__all__ = ["Diagram", "SphericalCovering", "KUKBound", "gcm_from_bonds", "min_spherical_cover", "kuk_bound"]


_FINITE_CACHE = {}


_MASK_BITS = {}


def _finite(flat):
    """Finiteness of the GCM whose entries, read row by row, are ``flat``."""
    hit = _FINITE_CACHE.get(flat)
    if hit is None:
        k = math.isqrt(len(flat))
        hit = _FINITE_CACHE[flat] = is_finite_type(GCM([flat[i * k : (i + 1) * k] for i in range(k)]))
    return hit


def _mask_bits(n):
    hit = _MASK_BITS.get(n)
    if hit is None:
        hit = _MASK_BITS[n] = [
            ([v for v in range(n) if mask >> v & 1], [mask ^ (1 << v) for v in range(n) if mask >> v & 1])
            for mask in range(1 << n)
        ]
    return hit


def gcm_from_bonds(n, bonds):
    """A GCM with the given bond products ``{(i, j): a_ij * a_ji}`` (1-based).

    Product ``p`` is realized as ``a_ij = -1, a_ji = -p`` for ``i < j``,
    except ``p = 4`` which uses ``a_ij = a_ji = -2``.
    """
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for (i, j), p in bonds.items():
        if not p:
            continue
        i, j = min(i, j) - 1, max(i, j) - 1
        if p == 4:
            a[i][j] = a[j][i] = -2
        else:
            a[i][j], a[j][i] = -1, -p
    return GCM(a)


class Diagram:
    """Dynkin diagram of a GCM; edge labels are the bond products ``a_ij * a_ji``."""

    def __init__(self, gcm):
        self.gcm = gcm if isinstance(gcm, GCM) else GCM(gcm)
        self.n = self.gcm.n
        self.labels = {
            (i, j): self.gcm.bond(i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if self.gcm.bond(i, j)
        }

    @classmethod
    def from_bonds(cls, n, bonds):
        return cls(gcm_from_bonds(n, bonds))

    def induced(self, vertices):
        return self.gcm.restrict(sorted(vertices))

    def is_spherical(self, vertices):
        idx = sorted(v - 1 for v in vertices)
        a = self.gcm.entries
        return _finite(tuple(a[i][j] for i in idx for j in idx))

    def finite_table(self):
        """``table[mask]`` is 1 iff the vertex set ``mask`` (bit ``v-1`` for vertex ``v``) is spherical."""
        n = self.n
        a = self.gcm.entries
        table = bytearray(1 << n)
        table[0] = 1
        masks = _mask_bits(n)
        for mask in range(1, 1 << n):
            bits, subs = masks[mask]
            # finiteness is hereditary, so a bad proper subset settles it
            for m in subs:
                if not table[m]:
                    break
            else:
                table[mask] = _finite(tuple(a[i][j] for i in bits for j in bits))
        return table

    def conflict_clique(self, table=None):
        """Size of a maximum clique of vertices pairwise joined by infinite-type bonds."""
        n = self.n
        if table is None:
            table = self.finite_table()
        adj = [0] * n
        for i, j in self.labels:
            if not table[(1 << (i - 1)) | (1 << (j - 1))]:
                adj[i - 1] |= 1 << (j - 1)
                adj[j - 1] |= 1 << (i - 1)
        best = 0

        def grow(size, candidates):
            nonlocal best
            if not candidates:
                best = max(best, size)
                return
            if size + bin(candidates).count("1") <= best:
                return
            v = candidates.bit_length() - 1
            grow(size + 1, candidates & adj[v])
            grow(size, candidates & ~(1 << v))

        grow(0, (1 << n) - 1)
        return best

    def to_json(self):
        return {"gcm": self.gcm.to_json(), "labels": [[i, j, p] for (i, j), p in sorted(self.labels.items())]}


@dataclass(frozen=True)
class SphericalCovering:
    partition: tuple
    lower_bound: int

    @property
    def r(self):
        return len(self.partition)

    def to_json(self):
        return {"r": self.r, "partition": [list(p) for p in self.partition]}


@dataclass(frozen=True)
class KUKBound:
    covering: SphericalCovering
    bound: int
    naive_bound: int

    def to_json(self):
        out = self.covering.to_json()
        out["kuk_bound"] = self.bound
        out["naive_bound"] = self.naive_bound
        return out


def _as_diagram(d):
    return d if isinstance(d, Diagram) else Diagram(d)


def min_spherical_cover(diagram):
    """Minimum spherical covering by branch and bound over set partitions.

    Among all minimizers the one whose restricted growth string is
    lexicographically smallest is returned; parts are listed by their
    smallest vertex.
    """
    diagram = _as_diagram(diagram)
    n = diagram.n
    if n == 0:
        return SphericalCovering((), 0)
    table = diagram.finite_table()
    lower = max(1, diagram.conflict_clique(table))
    r, rgs = _kernels.cover_search(bytes(table), n, lower)
    if rgs is None or r < lower:
        raise InternalError("cover search returned no partition")
    parts = [[] for _ in range(r)]
    for v, b in enumerate(rgs):
        parts[b].append(v + 1)
    for part in parts:
        if not table[sum(1 << (v - 1) for v in part)]:
            raise InternalError(f"part {part} is not spherical")
    return SphericalCovering(tuple(tuple(p) for p in parts), lower)


def kuk_bound(diagram):
    """``r + 1`` from a minimum spherical covering, with the naive ``n + 1``."""
    diagram = _as_diagram(diagram)
    cover = min_spherical_cover(diagram)
    return KUKBound(cover, cover.r + 1, diagram.n + 1)
