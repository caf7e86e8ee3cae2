"""Twisted Cartan-Chevalley involutions, the twist map and subset predicates.

Spherical model (SL_n over Q or Q(i))::

    theta(g) = ((g^sigma)^T)^-1

Affine model (SL_n over Q[t,t^-1] or Q(i)[t,t^-1])::

    theta(x) = ((x^(sigma rho))^-1)^T

Both are transpose-inverse after an entry-wise ring involution, so
``theta(g)^-1`` never needs an inversion and ``tau(g) = g * (g^(sigma rho))^T``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ModelMismatchError, NotInTorusError, TagUnavailableInModelError
from .matgrp import GroupElement, Matrix, Model, det, inverse, mul
from .ring import GaussianRational, LaurentPoly, rho, sigma

__all__ = [
    "ThetaSpec",
    "SubsetTag",
    "theta",
    "tau",
    "is_member",
    "check_theta_on_T",
    "random_k_element",
]


class SubsetTag(Enum):
    K = "K"
    Q = "Q"
    T = "T"
    M = "M"
    A = "A"
    U_PLUS = "U+"
    U_MINUS = "U-"
    B_PLUS = "B+"
    B_MINUS = "B-"

    @classmethod
    def parse(cls, s):
        aliases = {"U_PLUS": "U+", "U_MINUS": "U-", "B_PLUS": "B+", "B_MINUS": "B-"}
        return cls(aliases.get(s.upper(), s.upper()))


_TRIANGULAR = {SubsetTag.U_PLUS, SubsetTag.U_MINUS, SubsetTag.B_PLUS, SubsetTag.B_MINUS}


@dataclass(frozen=True)
class ThetaSpec:
    """Which involution to use.

    ``a_predicate`` selects the test for the maximal flat A: ``"positive"``
    (positive diagonal entries, the real-group reading) or ``"norm"``
    (entries of the form ``s * sigma(s)`` with ``s`` in the scalar field).
    """

    model: Model
    conjugate: bool = False
    a_predicate: str = "positive"

    @classmethod
    def for_ring(cls, ring, a_predicate="positive"):
        return cls(Model.for_ring(ring), ring.conjugating, a_predicate)

    @classmethod
    def for_element(cls, g, a_predicate="positive"):
        return cls.for_ring(g.ring, a_predicate)

    def entry_map(self, x):
        if self.conjugate:
            x = sigma(x)
        if self.model is Model.AFFINE:
            x = rho(x)
        return x


def _check_model(spec, g):
    if g.model is not spec.model or g.ring.conjugating is not spec.conjugate:
        raise ModelMismatchError(
            f"theta for {spec.model.value}/{'conj' if spec.conjugate else 'id'} applied to {g.ring.value} element"
        )


def theta(spec, g):
    _check_model(spec, g)
    twisted = GroupElement(g.matrix.map(spec.entry_map), g.model, check=False)
    return GroupElement(inverse(twisted).matrix.transpose(), g.model, check=False)


def theta_inverse(spec, g):
    """``theta(g)^-1``, computed without inverting anything."""
    _check_model(spec, g)
    return GroupElement(g.matrix.map(spec.entry_map).transpose(), g.model, check=False)


def tau(spec, g):
    """Twist map ``g -> g * theta(g)^-1``; lands in Q."""
    return mul(g, theta_inverse(spec, g))


# --------------------------------------------------------------------------
# membership


def _is_constant(x):
    return not isinstance(x, LaurentPoly) or x.is_constant()


def _scalar(x):
    return x.constant_value() if isinstance(x, LaurentPoly) else x


def _positive_rational(x):
    if type(x) is GaussianRational:
        if x.im:
            return None
        x = x.re
    return x if x > 0 else None


def _is_sum_of_two_squares(n):
    # n > 0 integer; every prime = 3 mod 4 must occur to an even power
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if p % 4 == 3 and e % 2:
                return False
        p += 1
    return n % 4 != 3


def _is_norm_value(x, conjugate):
    q = _positive_rational(x)
    if q is None:
        return False
    if conjugate:
        return _is_sum_of_two_squares(q.numerator * q.denominator)
    r_num, r_den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    return r_num * r_num == q.numerator and r_den * r_den == q.denominator


def is_member(spec, tag, g):
    """Exact membership of ``g`` in one of the distinguished subsets.

    ``U+/U-/B+/B-`` (triangular shapes) are only meaningful in the spherical
    model and raise :class:`TagUnavailableInModelError` otherwise.
    """
    if isinstance(tag, str):
        tag = SubsetTag.parse(tag)
    _check_model(spec, g)
    m = g.matrix
    if tag in _TRIANGULAR and spec.model is not Model.SPHERICAL:
        raise TagUnavailableInModelError(f"{tag.value} is only available in the spherical model")
    if tag is SubsetTag.K:
        return theta(spec, g) == g
    if tag is SubsetTag.Q:
        return theta_inverse(spec, g) == g
    if tag is SubsetTag.T:
        return m.is_diagonal() and all(_is_constant(x) for x in m.diagonal())
    if tag is SubsetTag.M:
        return is_member(spec, SubsetTag.T, g) and is_member(spec, SubsetTag.K, g)
    if tag is SubsetTag.A:
        if not is_member(spec, SubsetTag.T, g):
            return False
        vals = [_scalar(x) for x in m.diagonal()]
        if spec.a_predicate == "norm":
            return all(_is_norm_value(v, spec.conjugate) for v in vals)
        return all(_positive_rational(v) is not None for v in vals)
    if tag is SubsetTag.U_PLUS:
        return m.is_upper_triangular() and m.has_unit_diagonal()
    if tag is SubsetTag.U_MINUS:
        return m.is_lower_triangular() and m.has_unit_diagonal()
    if tag is SubsetTag.B_PLUS:
        return m.is_upper_triangular()
    if tag is SubsetTag.B_MINUS:
        return m.is_lower_triangular()
    raise ValueError(f"unknown tag {tag}")


def check_theta_on_T(spec, t):
    """Compare ``theta(t)`` with the entry-wise ``sigma(t)^-1`` on the torus."""
    if not is_member(spec, SubsetTag.T, t):
        raise NotInTorusError("element is not in the torus T")
    expected = Matrix.diag(t.ring, [1 / sigma(_scalar(x)) for x in t.matrix.diagonal()])
    return theta(spec, t).matrix == expected


# --------------------------------------------------------------------------
# K samplers

_PYTHAGOREAN = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def _embed(ring, n, i, j, block):
    z, o = ring.zero(), ring.one()
    rows = [[o if r == c else z for c in range(n)] for r in range(n)]
    rows[i][i], rows[i][j] = block[0]
    rows[j][i], rows[j][j] = block[1]
    return GroupElement(Matrix(ring, rows), check=False)


def _rotation(rng, ring, n):
    i, j = rng.sample(range(n), 2)
    a, b, c = rng.choice(_PYTHAGOREAN)
    x, y = Fraction(a, c), Fraction(b, c)
    if rng.random() < 0.5:
        x, y = y, x
    if rng.random() < 0.5:
        y = -y
    block = ((x, y), (-y, x))
    if ring.conjugating and rng.random() < 0.5:
        # SU(2) block [[a, -conj(b)], [b, conj(a)]] with |a|^2 + |b|^2 = 1
        iy = GaussianRational(0, y)
        block = ((GaussianRational(x), iy), (iy, GaussianRational(x)))
    return _embed(ring, n, i, j, block)


def _signed_permutation(rng, ring, n):
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    z = ring.zero()
    rows = [[z] * n for _ in range(n)]
    for r, c in enumerate(perm):
        rows[r][c] = ring.coerce(signs[r])
    m = Matrix(ring, rows)
    if det(m) != 1:
        rows[0] = [-x for x in rows[0]]
        m = Matrix(ring, rows)
    return GroupElement(m, check=False)


def _unitary_torus(rng, ring, n):
    units = [1, -1]
    if ring.conjugating:
        units += [GaussianRational(0, 1), GaussianRational(0, -1)]
    vals = [rng.choice(units) for _ in range(n - 1)]
    last = Fraction(1)
    for v in vals:
        last = last / v
    vals.append(last)
    return GroupElement(Matrix.diag(ring, vals), check=False)


def _laurent_torus(rng, ring, n):
    i, j = rng.sample(range(n), 2)
    k = rng.choice((-2, -1, 1, 2))
    vals = [LaurentPoly.t(0)] * n
    vals[i] = LaurentPoly.t(k)
    vals[j] = LaurentPoly.t(-k)
    return GroupElement(Matrix.diag(ring, vals), check=False)


def random_k_element(rng, ring, n, factors=3):
    """Random exact element of K.

    Products of Pythagorean rotations (SU(2)-type blocks over Q(i)), signed
    permutations, unitary diagonal matrices and, in the affine model,
    ``diag(..., t^k, ..., t^-k, ...)``.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    samplers = [_rotation, _signed_permutation, _unitary_torus]
    if ring.is_laurent:
        samplers.append(_laurent_torus)
    k = GroupElement.identity(ring, n)
    for _ in range(factors):
        k = mul(k, rng.choice(samplers)(rng, ring, n))
    return k

