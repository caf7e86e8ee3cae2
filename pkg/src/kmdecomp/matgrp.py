"""Square matrices over a :class:`~kmdecomp.ring.Ring` and the group SL_n.

Indices in the public API (Chevalley generators, error positions) are
1-based, matching matrix notation; internally rows are 0-based tuples.
"""

from __future__ import annotations

import random
from enum import Enum
from fractions import Fraction

from .errors import (
    BadIndicesError,
    DimensionMismatchError,
    ModelMismatchError,
    NotInGroupError,
    RingMismatchError,
)
from .ring import LaurentPoly, Poly, Ring, sigma

__all__ = [
    "Model",
    "Matrix",
    "GroupElement",
    "mul",
    "det",
    "det_cofactor",
    "inverse",
    "charpoly",
    "chevalley_generator",
    "random_group_element",
    "random_torus_element",
    "random_bounded_element",
]


class Model(Enum):
    SPHERICAL = "spherical"
    AFFINE = "affine"

    @classmethod
    def for_ring(cls, ring):
        return cls.AFFINE if ring.is_laurent else cls.SPHERICAL


def _div(a, b):
    if isinstance(a, LaurentPoly):
        return a.exact_div(b)
    return a / b


class Matrix:
    """Immutable square matrix with entries in ``ring``."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows, *, trusted=False):
        if not trusted:
            rows = tuple(tuple(ring.coerce(x) for x in row) for row in rows)
            n = len(rows)
            if any(len(r) != n for r in rows):
                raise DimensionMismatchError("matrix must be square")
        self.ring = ring
        self.rows = rows

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero(), ring.one()
        return cls(ring, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), trusted=True)

    @classmethod
    def diag(cls, ring, values):
        vals = [ring.coerce(v) for v in values]
        z = ring.zero()
        n = len(vals)
        return cls(ring, tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), trusted=True)

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other):
        if self.ring is not other.ring:
            raise RingMismatchError(f"{self.ring.value} vs {other.ring.value}")
        if self.n != other.n:
            raise DimensionMismatchError(f"{self.n} vs {other.n}")

    def __matmul__(self, other):
        self._check(other)
        cols = list(zip(*other.rows))
        zero = self.ring.zero()
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                new.append(acc)
            out.append(tuple(new))
        return Matrix(self.ring, tuple(out), trusted=True)

    __mul__ = __matmul__

    def __add__(self, other):
        self._check(other)
        return Matrix(
            self.ring, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), trusted=True
        )

    def __sub__(self, other):
        self._check(other)
        return Matrix(
            self.ring, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), trusted=True
        )

    def __neg__(self):
        return self.map(lambda x: -x)

    def scale(self, c):
        return self.map(lambda x: x * c)

    def map(self, f):
        return Matrix(self.ring, tuple(tuple(f(x) for x in row) for row in self.rows), trusted=True)

    def transpose(self):
        return Matrix(self.ring, tuple(zip(*self.rows)), trusted=True)

    @property
    def T(self):
        return self.transpose()

    def conj_transpose(self):
        """``sigma`` applied entry-wise, then transposed."""
        return self.map(sigma).transpose()

    def trace(self):
        acc = self.ring.zero()
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def minor(self, i, j):
        return Matrix(
            self.ring,
            tuple(tuple(x for c, x in enumerate(row) if c != j) for r, row in enumerate(self.rows) if r != i),
            trusted=True,
        )

    # -- shape predicates -------------------------------------------------

    def is_diagonal(self):
        return all(not self.rows[i][j] for i in range(self.n) for j in range(self.n) if i != j)

    def is_upper_triangular(self):
        return all(not self.rows[i][j] for i in range(self.n) for j in range(i))

    def is_lower_triangular(self):
        return all(not self.rows[i][j] for i in range(self.n) for j in range(i + 1, self.n))

    def has_unit_diagonal(self):
        return all(self.rows[i][i] == 1 for i in range(self.n))

    def diagonal(self):
        return [self.rows[i][i] for i in range(self.n)]

    # -- equality / io ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring is other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix[{self.ring.value}]({body})"

    def to_json(self):
        return {
            "ring": self.ring.value,
            "n": self.n,
            "entries": [[self.ring.encode(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, obj, ring=None):
        tag = obj.get("ring")
        file_ring = Ring(tag) if tag else None
        if ring is not None and file_ring is not None and ring is not file_ring:
            raise RingMismatchError(f"file declares {file_ring.value}, requested {ring.value}")
        ring = file_ring or ring or Ring.Q
        entries = obj["entries"]
        n = obj.get("n", len(entries))
        if len(entries) != n:
            raise DimensionMismatchError(f"declared n={n}, got {len(entries)} rows")
        return cls(ring, [[ring.decode(x) for x in row] for row in entries])

    def to_float(self):
        """numpy array (complex for Q(i)); Laurent entries are not allowed."""
        import numpy as np

        if self.ring.is_laurent:
            raise RingMismatchError("numeric conversion needs a scalar ring")
        if self.ring.conjugating:
            return np.array([[complex(x) for x in row] for row in self.rows], dtype=complex)
        return np.array([[float(x) for x in row] for row in self.rows], dtype=float)


# --------------------------------------------------------------------------
# determinants


def det(m):
    """Exact determinant by fraction-free Bareiss elimination.

    All divisions are exact in the integral domain, so the same code runs
    over Q, Q(i) and the Laurent rings.
    """
    n = m.n
    if n == 0:
        return m.ring.one()
    a = [list(row) for row in m.rows]
    sign = 1
    prev = m.ring.one()
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return m.ring.zero()
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = _div(akk * row_i[j] - aik * row_k[j], prev)
            row_i[k] = m.ring.zero()
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det_cofactor(m):
    """Laplace expansion along the first row; works over any commutative ring."""
    rows = m.rows if isinstance(m, Matrix) else m
    return _laplace(rows)


def _laplace(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = 0
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        sub = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = a * _laplace(sub)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def adjugate(m):
    n = m.n
    if n == 1:
        return Matrix.identity(m.ring, 1)
    r = m.rows
    if n == 2:
        return Matrix(m.ring, ((r[1][1], -r[0][1]), (-r[1][0], r[0][0])), trusted=True)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(m.minor(i, j)) if n > 3 else det_cofactor(m.minor(i, j))
            out[j][i] = c if (i + j) % 2 == 0 else -c
    return Matrix(m.ring, tuple(tuple(row) for row in out), trusted=True)


# --------------------------------------------------------------------------
# group elements


class GroupElement:
    """An element of SL_n over ``matrix.ring``, tagged with its model.

    Construction verifies ``det == 1`` unless ``check=False`` (used internally
    by operations that preserve the determinant).
    """

    __slots__ = ("matrix", "model")

    def __init__(self, matrix, model=None, *, check=True):
        expected = Model.for_ring(matrix.ring)
        if model is None:
            model = expected
        elif model is not expected:
            raise ModelMismatchError(f"ring {matrix.ring.value} does not belong to the {model.value} model")
        if check and det(matrix) != 1:
            raise NotInGroupError(f"determinant {det(matrix)} != 1")
        self.matrix = matrix
        self.model = model

    @classmethod
    def from_rows(cls, ring, rows, model=None):
        return cls(Matrix(ring, rows), model)

    @classmethod
    def identity(cls, ring, n):
        return cls(Matrix.identity(ring, n), check=False)

    @classmethod
    def diag(cls, ring, values):
        return cls(Matrix.diag(ring, values))

    @property
    def ring(self):
        return self.matrix.ring

    @property
    def n(self):
        return self.matrix.n

    @property
    def rows(self):
        return self.matrix.rows

    def __matmul__(self, other):
        return mul(self, other)

    __mul__ = __matmul__

    def inverse(self):
        return inverse(self)

    def __pow__(self, k):
        base = self if k >= 0 else inverse(self)
        result = GroupElement.identity(self.ring, self.n)
        for _ in range(abs(k)):
            result = mul(result, base)
        return result

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.model is other.model and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"GroupElement[{self.model.value}]({self.matrix!r})"

    def is_identity(self):
        return self.matrix == Matrix.identity(self.ring, self.n)

    def to_json(self):
        return self.matrix.to_json()

    @classmethod
    def from_json(cls, obj, ring=None, model=None):
        return cls(Matrix.from_json(obj, ring), model)


def mul(a, b):
    if a.model is not b.model:
        raise ModelMismatchError(f"{a.model.value} vs {b.model.value}")
    return GroupElement(a.matrix @ b.matrix, a.model, check=False)


def inverse(g):
    """Inverse as the adjugate (valid because det g = 1)."""
    return GroupElement(adjugate(g.matrix), g.model, check=False)


def charpoly(g, var="λ"):
    """``det(var*I - g)`` by Faddeev-LeVerrier.

    Only divisions by the integers 1..n occur, so this is valid over every
    ring here (characteristic zero).
    """
    m = g.matrix if isinstance(g, GroupElement) else g
    n = m.n
    ring = m.ring
    coeffs = [None] * (n + 1)
    coeffs[n] = ring.one()
    ident = Matrix.identity(ring, n)
    mk = Matrix(ring, tuple(tuple(ring.zero() for _ in range(n)) for _ in range(n)), trusted=True)
    for k in range(1, n + 1):
        mk = (m @ mk) + ident.scale(coeffs[n - k + 1])
        tr = (m @ mk).trace()
        coeffs[n - k] = -(tr * Fraction(1, k))
    return Poly(coeffs, var)


def chevalley_generator(model, n, i, j, k=0, s=1, ring=None):
    """Elementary unipotent ``I + s*t^k*E_ij`` (1-based ``i != j``)."""
    model = Model(model)
    if ring is None:
        ring = Ring.LAURENT_Q if model is Model.AFFINE else Ring.Q
    if Model.for_ring(ring) is not model:
        raise ModelMismatchError(f"ring {ring.value} is not in the {model.value} model")
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise BadIndicesError(f"bad root-group indices ({i}, {j}) for n={n}")
    if k and model is Model.SPHERICAL:
        raise BadIndicesError("exponent must be 0 in the spherical model")
    entry = ring.coerce(LaurentPoly.monomial(ring.base.coerce(s), k)) if ring.is_laurent else ring.coerce(s)
    z, o = ring.zero(), ring.one()
    rows = tuple(
        tuple(o if r == c else (entry if (r, c) == (i - 1, j - 1) else z) for c in range(n)) for r in range(n)
    )
    return GroupElement(Matrix(ring, rows, trusted=True), model, check=False)


# --------------------------------------------------------------------------
# random sampling


def _random_scalar(rng, ring, height=3):
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    x = Fraction(num, den)
    if ring.conjugating:
        y = Fraction(rng.randint(-height, height), rng.randint(1, height))
        return ring.base.coerce(x) + ring.base.coerce(y) * ring.base.decode("1*i")
    return x


def random_torus_element(rng, ring, n, height=3):
    """Random diagonal element of SL_n with constant nonzero entries."""
    vals = []
    for _ in range(n - 1):
        x = 0
        while not x:
            x = _random_scalar(rng, ring.base, height)
        vals.append(x)
    last = ring.base.one()
    for v in vals:
        last = last / v
    vals.append(last)
    return GroupElement.diag(ring, vals)


def random_group_element(rng, ring, n, length=4, height=2, max_exp=1):
    """Product of a random torus element and ``length`` root-group elements."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    model = Model.for_ring(ring)
    g = random_torus_element(rng, ring, n, height)
    for _ in range(length):
        i, j = rng.sample(range(1, n + 1), 2)
        k = rng.randint(-max_exp, max_exp) if model is Model.AFFINE else 0
        s = 0
        while not s:
            s = _random_scalar(rng, ring.base, height)
        g = mul(g, chevalley_generator(model, n, i, j, k, s, ring))
    return g


def _height(x):
    x = Fraction(x)
    return max(abs(x.numerator), x.denominator)


def random_bounded_element(rng, n, height=10, max_tries=1000):
    """Random element of SL_n(Q) whose entries all have height at most ``height``.

    Samples ``p * d * l * u`` (signed permutation, torus, unitriangular
    factors with small entries) and rejects until the height bound holds.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    small = [Fraction(p, q) for p in range(-2, 3) for q in (1, 2)]
    torus = [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3), Fraction(1, 3)]
    for _ in range(max_tries):
        perm = list(range(n))
        rng.shuffle(perm)
        signs = [rng.choice((1, -1)) for _ in range(n)]
        d = [rng.choice(torus) for _ in range(n - 1)]
        last = Fraction(1)
        for x in d:
            last /= x
        d.append(last)
        low = [[Fraction(int(i == j)) if i <= j else rng.choice(small) for j in range(n)] for i in range(n)]
        up = [[Fraction(int(i == j)) if i >= j else rng.choice(small) for j in range(n)] for i in range(n)]
        lu = [[sum(low[i][k] * up[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        rows = [[d[i] * lu[i][j] for j in range(n)] for i in range(n)]
        rows = [rows[perm[i]] for i in range(n)]
        sign = signs[0]
        for s in signs[1:]:
            sign *= s
        # fix the sign so that det = 1: permutation parity times product of signs
        parity = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j, length_ = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length_ += 1
                if length_ % 2 == 0:
                    parity = -parity
        if sign * parity != 1:
            signs[0] = -signs[0]
        rows = [[signs[i] * x for x in rows[i]] for i in range(n)]
        if all(_height(x) <= height for row in rows for x in row):
            return GroupElement(Matrix(Ring.Q, rows))
    raise RuntimeError("could not sample an element within the height bound")
