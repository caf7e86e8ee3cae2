"""Exact scalar and Laurent-polynomial arithmetic.

Scalars are :class:`fractions.Fraction` (the field Q) or
:class:`GaussianRational` (the field Q(i)).  Laurent polynomials in ``t`` are
sparse maps ``exponent -> scalar``.  Two involutions act on these rings:

* ``sigma`` -- complex conjugation on Q(i), the identity on Q, applied
  coefficient-wise to Laurent polynomials;
* ``rho`` -- the linear ring automorphism exchanging ``t`` and ``t^-1``.

Every value is immutable after construction.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from itertools import product

from .errors import InexactDivisionError, ZeroPolynomialError

__all__ = [
    "GaussianRational",
    "LaurentPoly",
    "Poly",
    "Ring",
    "sigma",
    "rho",
    "scalar_sqrt",
    "laurent_sqrt",
    "rational_roots",
    "encode_scalar",
    "decode_scalar",
    "format_element",
]

_ONE = Fraction(1)
_ZERO = Fraction(0)


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _new(cls, re, im):
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @staticmethod
    def _coerce(x):
        if type(x) is GaussianRational:
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational._new(Fraction(x), _ZERO)
        return None

    def conjugate(self):
        return GaussianRational._new(self.re, -self.im)

    def norm(self):
        """The norm ``z * conj(z)`` as a Fraction."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._new(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._new(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._new(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._new(self.re * other, self.im * other)
        if type(other) is not GaussianRational:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational._new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        c, d = o.re / n, -o.im / n
        a, b = self.re, self.im
        return GaussianRational._new(a * c - b * d, a * d + b * c)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational._new(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        result = GaussianRational._new(_ONE, _ZERO)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return encode_scalar(self)

    def __repr__(self):
        return f"GaussianRational({self})"


I = GaussianRational(0, 1)


def _is_scalar(x):
    return isinstance(x, (int, Fraction, GaussianRational))


def sigma(x):
    """Field involution: conjugation on Q(i), identity on Q.

    Applies coefficient-wise to Laurent polynomials and entry-wise to
    :class:`Poly` coefficients.
    """
    if isinstance(x, (GaussianRational, LaurentPoly, Poly)):
        return x.conjugate()
    return x


def rho(p):
    """Ring involution ``t <-> t^-1``; scalars are fixed."""
    if isinstance(p, LaurentPoly):
        return p.rho()
    return p


# --------------------------------------------------------------------------
# scalar encoding


def encode_scalar(x):
    """Canonical string: ``"a/b"`` or ``"a/b+c/d*i"``."""
    if type(x) is GaussianRational:
        if not x.im:
            return str(x.re)
        sign = "+" if x.im > 0 else "-"
        return f"{x.re}{sign}{abs(x.im)}*i"
    return str(Fraction(x))


def decode_scalar(s, gaussian=False):
    if isinstance(s, (int, Fraction, GaussianRational)):
        val = s
    else:
        s = str(s).replace(" ", "")
        if s.endswith("i"):
            body = s[:-1].rstrip("*")
            idx = max(body.rfind("+"), body.rfind("-"))
            if idx > 0:
                re_s, im_s = body[:idx], body[idx:]
            else:
                re_s, im_s = "0", body
            if im_s in ("", "+"):
                im_s = "1"
            elif im_s == "-":
                im_s = "-1"
            val = GaussianRational(Fraction(re_s), Fraction(im_s))
        else:
            val = Fraction(s)
    if gaussian:
        return GaussianRational._coerce(val)
    if type(val) is GaussianRational:
        if val.im:
            raise ValueError(f"non-real scalar {s!r} in a real ring")
        return val.re
    return Fraction(val)


def scalar_sqrt(x):
    """Square root of ``x`` inside its own field, or ``None``.

    The root returned has positive real part; for purely imaginary roots the
    imaginary part is positive.
    """
    if type(x) is GaussianRational:
        a, b = x.re, x.im
        if not b:
            r = _rational_sqrt(abs(a))
            if r is None:
                return None
            return GaussianRational._new(r, _ZERO) if a >= 0 else GaussianRational._new(_ZERO, r)
        m = _rational_sqrt(a * a + b * b)
        if m is None:
            return None
        re = _rational_sqrt((a + m) / 2)
        im = _rational_sqrt((m - a) / 2)
        if re is None or im is None:
            return None
        return GaussianRational._new(re, im if b > 0 else -im)
    x = Fraction(x)
    if x < 0:
        return None
    return _rational_sqrt(x)


def _rational_sqrt(x):
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


# --------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Sparse Laurent polynomial in ``t`` with scalar coefficients.

    Zero coefficients are never stored, so the zero polynomial has no terms and
    structural equality decides equality.

    >>> p = LaurentPoly({1: 1, 0: 4, -1: 1})
    >>> str(p)
    't + 4 + t^-1'
    >>> p.rho() == p
    True
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, LaurentPoly):
            self._terms = terms._terms
        elif isinstance(terms, dict):
            d = {}
            for k, c in terms.items():
                if not isinstance(c, GaussianRational):
                    c = Fraction(c)
                if c:
                    d[int(k)] = c
            self._terms = d
        else:
            c = terms if isinstance(terms, GaussianRational) else Fraction(terms)
            self._terms = {0: c} if c else {}

    @classmethod
    def _wrap(cls, d):
        obj = object.__new__(cls)
        obj._terms = d
        return obj

    @classmethod
    def monomial(cls, c, k):
        return cls({k: c})

    @classmethod
    def t(cls, k=1):
        return cls._wrap({k: _ONE})

    # -- inspection -------------------------------------------------------

    def terms(self):
        """``(exponent, coefficient)`` pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def coeff(self, k):
        return self._terms.get(k, _ZERO)

    @property
    def lo(self):
        return min(self._terms) if self._terms else None

    @property
    def hi(self):
        return max(self._terms) if self._terms else None

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self):
        """The scalar value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(0, _ZERO)

    def is_unit(self):
        """Units of F[t, t^-1] are exactly the nonzero monomials."""
        return len(self._terms) == 1

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- involutions ------------------------------------------------------

    def rho(self):
        return LaurentPoly._wrap({-k: c for k, c in self._terms.items()})

    def conjugate(self):
        return LaurentPoly._wrap(
            {k: (c.conjugate() if type(c) is GaussianRational else c) for k, c in self._terms.items()}
        )

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(x):
        if type(x) is LaurentPoly:
            return x
        if _is_scalar(x):
            return LaurentPoly(x)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = dict(self._terms)
        for k, c in o._terms.items():
            v = d.get(k)
            if v is None:
                d[k] = c
            else:
                v = v + c
                if v:
                    d[k] = v
                else:
                    del d[k]
        return LaurentPoly._wrap(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return LaurentPoly._wrap({})
            return LaurentPoly._wrap({k: c * other for k, c in self._terms.items()})
        if type(other) is not LaurentPoly:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        d = {}
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                v = d.get(k)
                d[k] = ca * cb if v is None else v + ca * cb
        return LaurentPoly._wrap({k: c for k, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if not self.is_unit():
                raise InexactDivisionError(f"{self} is not a unit")
            ((k, c),) = self._terms.items()
            return LaurentPoly._wrap({k * e: (1 / c) ** (-e)})
        result = LaurentPoly._wrap({0: _ONE})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other):
        """Quotient ``self / other`` in F[t, t^-1]; raises if not exact."""
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("division by zero")
            inv = 1 / (other if type(other) is GaussianRational else Fraction(other))
            return self * inv
        if type(other) is not LaurentPoly:
            raise TypeError(f"cannot divide LaurentPoly by {type(other).__name__}")
        if not other._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return self
        if len(other._terms) == 1:
            ((k, c),) = other._terms.items()
            inv = 1 / c
            return LaurentPoly._wrap({e - k: v * inv for e, v in self._terms.items()})
        # long division from the top; the quotient spans [lo(p)-lo(q), hi(p)-hi(q)]
        q_hi, q_lo = other.hi, other.lo
        lead_inv = 1 / other._terms[q_hi]
        floor = self.lo - q_lo
        rem = dict(self._terms)
        quot = {}
        while rem:
            top = max(rem)
            e = top - q_hi
            if e < floor:
                raise InexactDivisionError(f"{other} does not divide {self}")
            c = rem[top] * lead_inv
            quot[e] = c
            for k, v in other._terms.items():
                kk = k + e
                nv = rem.get(kk, _ZERO) - c * v
                if nv:
                    rem[kk] = nv
                else:
                    rem.pop(kk, None)
        return LaurentPoly._wrap(quot)

    def __truediv__(self, other):
        return self.exact_div(other)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o.exact_div(self)

    def __call__(self, x):
        """Evaluate at a nonzero scalar or float."""
        return sum((c * x**k for k, c in self._terms.items()), 0)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if type(other) is LaurentPoly:
            return self._terms == other._terms
        if _is_scalar(other):
            if not other:
                return not self._terms
            return len(self._terms) == 1 and self._terms.get(0) == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self._terms.get(0, _ZERO))
        return hash(frozenset(self._terms.items()))

    # -- formatting -------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), reverse=True):
            if k == 0:
                parts.append(encode_scalar(c))
                continue
            mono = "t" if k == 1 else f"t^{k}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            elif type(c) is GaussianRational and c.im:
                parts.append(f"({encode_scalar(c)})*{mono}")
            else:
                parts.append(f"{encode_scalar(c)}*{mono}")
        return _join_terms(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self):
        return {str(k): encode_scalar(c) for k, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj, gaussian=False):
        if isinstance(obj, dict):
            return cls({int(k): decode_scalar(v, gaussian) for k, v in obj.items()})
        return cls(decode_scalar(obj, gaussian))


def _join_terms(parts):
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def laurent_sqrt(p):
    """Square root of a Laurent polynomial inside F[t, t^-1], or ``None``.

    The span of ``p`` must have even endpoints; coefficients of the root are
    then recovered from the top term down and the candidate is verified by
    squaring.  The root has leading coefficient with positive real part.
    """
    if not isinstance(p, LaurentPoly):
        return scalar_sqrt(p)
    if p.is_zero():
        return p
    lo, hi = p.lo, p.hi
    if lo % 2 or hi % 2:
        return None
    top = scalar_sqrt(p.coeff(hi))
    if top is None:
        return None
    m, base = hi // 2, lo // 2
    q = {m: top}
    inv2 = 1 / (2 * top)
    for k in range(m - 1, base - 1, -1):
        # coefficient of t^(m+k) in q^2 only involves q_k once the higher ones are known
        acc = p.coeff(m + k)
        for i in range(k + 1, m):
            j = m + k - i
            if j <= k or j > m:
                continue
            acc = acc - q.get(i, _ZERO) * q.get(j, _ZERO)
        q[k] = acc * inv2
    root = LaurentPoly({k: c for k, c in q.items()})
    if root * root != p:
        return None
    return root


# --------------------------------------------------------------------------
# univariate polynomials over a ring


def format_element(x):
    return str(x) if isinstance(x, LaurentPoly) else encode_scalar(x)


def _is_atomic(s):
    return " " not in s and "+" not in s[1:] and "-" not in s[1:]


class Poly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``var^k``.

    Coefficients are ring elements (scalars or Laurent polynomials).  Trailing
    zero coefficients are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var="λ"):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def from_roots(cls, roots, var="λ"):
        p = cls([1], var)
        for r in roots:
            p = p * cls([-r, 1], var)
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        return Poly([other], self.var)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[k] + o[k] for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return Poly([], self.var)
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = Poly([1], self.var)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        return self == self._lift(other)

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def conjugate(self):
        return Poly([sigma(c) for c in self.coeffs], self.var)

    def map(self, f):
        return Poly([f(c) for c in self.coeffs], self.var)

    def deflate(self, r):
        """Quotient of synthetic division by ``(var - r)``; remainder must vanish."""
        n = self.degree
        out = [0] * n
        acc = 0
        for k in range(n, 0, -1):
            acc = acc * r + self.coeffs[k]
            out[k - 1] = acc
        if acc * r + self.coeffs[0]:
            raise InexactDivisionError(f"{r} is not a root")
        return Poly(out, self.var)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        v = self.var
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = format_element(c)
            if k == 0:
                parts.append(cs if _is_atomic(cs) else f"({cs})")
                continue
            mono = v if k == 1 else f"{v}^{k}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            elif _is_atomic(cs):
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        return _join_terms(parts)

    def __repr__(self):
        return f"Poly({self})"

    def to_json(self):
        return {
            "var": self.var,
            "coeffs": [c.to_json() if isinstance(c, LaurentPoly) else encode_scalar(c) for c in self.coeffs],
            "text": str(self),
        }


# --------------------------------------------------------------------------
# rational roots


def _int_divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _lcm(values):
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def _gaussian_divisors(a, b):
    """All Gaussian integers dividing ``a + b i`` (including associates)."""
    n = a * a + b * b
    out = []
    for m in _int_divisors(n):
        r = math.isqrt(m)
        for x in range(-r, r + 1):
            y2 = m - x * x
            y = math.isqrt(y2)
            if y * y != y2:
                continue
            for yy in {y, -y}:
                # (a+bi)/(x+yi) = (a+bi)(x-yi)/m
                re, im = a * x + b * yy, b * x - a * yy
                if re % m == 0 and im % m == 0:
                    out.append((x, yy))
    return out


def rational_roots(p):
    """Roots of ``p`` lying in its coefficient field, with multiplicity.

    Coefficients must be Fractions (roots in Q) or GaussianRationals (roots in
    Q(i)).  Candidates come from the rational-root sieve on the primitive
    integral form (Gaussian-integer divisors for Q(i)); each hit is deflated
    repeatedly to collect its multiplicity.
    """
    if not isinstance(p, Poly):
        p = Poly(p)
    if not p.coeffs:
        raise ZeroPolynomialError("the zero polynomial has no finite root set")
    roots = []
    while p.degree > 0 and not p.coeffs[0]:
        roots.append(_ZERO)
        p = Poly(p.coeffs[1:], p.var)
    if p.degree <= 0:
        return roots
    gaussian = any(type(c) is GaussianRational for c in p.coeffs)
    if gaussian:
        cands = _gaussian_candidates(p)
    else:
        cands = _rational_candidates(p)
    found = []
    for r in cands:
        while p.degree > 0 and not p(r):
            found.append(r)
            p = p.deflate(r)
        if p.degree <= 0:
            break
    roots += found
    if gaussian:
        return sorted((GaussianRational._coerce(r) for r in roots), key=lambda z: (z.re, z.im))
    return sorted(roots)


def _rational_candidates(p):
    cs = [Fraction(c.re) if type(c) is GaussianRational else Fraction(c) for c in p.coeffs]
    den = _lcm([c.denominator for c in cs])
    ints = [int(c * den) for c in cs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    out = set()
    for a in _int_divisors(ints[0]):
        for b in _int_divisors(ints[-1]):
            out.add(Fraction(a, b))
            out.add(Fraction(-a, b))
    return sorted(out)


def _gaussian_candidates(p):
    cs = [GaussianRational._coerce(c) for c in p.coeffs]
    den = _lcm([c.re.denominator for c in cs] + [c.im.denominator for c in cs])
    ints = [(int(c.re * den), int(c.im * den)) for c in cs]
    nums = _gaussian_divisors(*ints[0])
    # denominators only matter up to units
    dens = {(x, y) for x, y in _gaussian_divisors(*ints[-1]) if x > 0 and y >= 0}
    out = set()
    for (a, b), (c, d) in product(nums, dens):
        out.add(GaussianRational(a, b) / GaussianRational(c, d))
    return sorted(out, key=lambda z: (abs(z.re) + abs(z.im), z.re, z.im))


# --------------------------------------------------------------------------
# ring tags


class Ring(Enum):
    """The four coefficient rings; sigma is conjugation iff the base is Q(i)."""

    Q = "q"
    QI = "qi"
    LAURENT_Q = "laurent_q"
    LAURENT_QI = "laurent_qi"

    @property
    def is_laurent(self):
        return self in (Ring.LAURENT_Q, Ring.LAURENT_QI)

    @property
    def conjugating(self):
        return self in (Ring.QI, Ring.LAURENT_QI)

    @property
    def base(self):
        return Ring.QI if self.conjugating else Ring.Q

    def laurent(self):
        return Ring.LAURENT_QI if self.conjugating else Ring.LAURENT_Q

    def coerce(self, x):
        if isinstance(x, str):
            return self.decode(x)
        if self.is_laurent:
            if isinstance(x, LaurentPoly):
                if self.conjugating:
                    return LaurentPoly._wrap({k: GaussianRational._coerce(c) for k, c in x._terms.items()})
                return LaurentPoly._wrap({k: decode_scalar(c) for k, c in x._terms.items()})
            return LaurentPoly(decode_scalar(x, self.conjugating))
        if isinstance(x, LaurentPoly):
            return decode_scalar(x.constant_value(), self.conjugating)
        return decode_scalar(x, self.conjugating)

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def encode(self, x):
        if self.is_laurent:
            return x.to_json()
        return encode_scalar(x)

    def decode(self, obj):
        if self.is_laurent:
            return LaurentPoly.from_json(obj, self.conjugating)
        return decode_scalar(obj, self.conjugating)
