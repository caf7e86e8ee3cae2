"""Decompositions and certificates.

Spherical model: refined Iwasawa ``g = k a u`` (with ``a^2`` and ``u`` exact),
Birkhoff ``g = u+ t u-``, Cartan ``g = k1 a k2``, polar ``g = p k`` and KAK
words.  Affine model: the diagonalizability test on the characteristic
polynomial, the SL_2 square-root decision, nucleus membership and the
non-diagonalizable witness ``v = tau(u)`` with ``u = I + (1+t) E_12``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from . import numeric
from .errors import (
    BadDimensionError,
    InexactDivisionError,
    InternalError,
    ModelMismatchError,
    NotInTauGError,
    NotSymmetricError,
    OutsideBigCellError,
    RingMismatchError,
)
from .involution import SubsetTag, ThetaSpec, is_member, tau, theta
from .matgrp import GroupElement, Matrix, Model, charpoly, chevalley_generator, det, inverse, mul
from .ring import (
    GaussianRational,
    LaurentPoly,
    Poly,
    Ring,
    laurent_sqrt,
    rational_roots,
    scalar_sqrt,
    sigma,
)

__all__ = [
    "IwasawaFactors",
    "BirkhoffFactors",
    "CartanFactors",
    "PolarFactors",
    "KAKWord",
    "DiagCertificate",
    "SqrtCertificate",
    "NucleusCertificate",
    "HoleWitness",
    "iwasawa",
    "birkhoff",
    "cartan",
    "polar",
    "kak_word",
    "diag_test",
    "sl2_sqrt",
    "nucleus_member",
    "hole_witness",
]

DEFAULT_TOL = 1e-10


def _require_spherical(g, name):
    if g.model is not Model.SPHERICAL:
        raise ModelMismatchError(f"{name} needs a spherical-model element")


def _require_q(g, name):
    _require_spherical(g, name)
    if g.ring is not Ring.Q:
        raise RingMismatchError(f"{name} is implemented over Q only")


def _positive(x):
    if isinstance(x, LaurentPoly):
        if not x.is_constant():
            return False
        x = x.constant_value()
    if type(x) is GaussianRational:
        return not x.im and x.re > 0
    return x > 0


def _as_real(x):
    return x.re if type(x) is GaussianRational else Fraction(x)


# --------------------------------------------------------------------------
# Iwasawa


@dataclass(frozen=True)
class IwasawaFactors:
    """``g = k @ diag(sqrt(a_squared)) @ u`` with exact ``a_squared`` and ``u``."""

    k: np.ndarray
    a_squared: Matrix
    u: Matrix
    side: str
    residual: float
    orthogonality: float
    tol: float

    @property
    def a(self):
        return np.diag([np.sqrt(float(_as_real(x))) for x in self.a_squared.diagonal()])

    @property
    def verified(self):
        return self.residual <= self.tol and self.orthogonality <= self.tol

    def to_json(self):
        return {
            "side": self.side,
            "a_squared": self.a_squared.to_json(),
            "u": self.u.to_json(),
            "k": numeric.to_json(self.k),
            "a": numeric.to_json(self.a),
            "residual": numeric.fmt(self.residual),
            "orthogonality": numeric.fmt(self.orthogonality),
        }


def _ldl_upper(h):
    """Exact ``h = u^* d u`` with ``u`` upper unitriangular (Hermitian ``h``)."""
    n = h.n
    ring = h.ring
    H = h.rows
    d = [None] * n
    u = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    for j in range(n):
        acc = H[j][j]
        for k in range(j):
            ukj = u[k][j]
            if ukj:
                acc = acc - sigma(ukj) * d[k] * ukj
        if not _positive(acc):
            raise InternalError(f"pivot {j + 1} of g^* g is not positive: {acc}")
        d[j] = acc
        for i in range(j + 1, n):
            acc = H[j][i]
            for k in range(j):
                ukj = u[k][j]
                if ukj:
                    acc = acc - sigma(ukj) * d[k] * u[k][i]
            u[j][i] = acc / d[j]
    return d, Matrix(ring, tuple(tuple(r) for r in u), trusted=True)


def _reverse(m):
    return Matrix(m.ring, tuple(tuple(reversed(r)) for r in reversed(m.rows)), trusted=True)


def iwasawa(g, side="+", tol=DEFAULT_TOL):
    """Refined Iwasawa factorization ``g = k a u`` with ``u`` in U+ (or U-).

    ``g^* g = u^* a^2 u`` is computed exactly by root-free symmetric
    elimination; only ``k = g u^-1 a^-1`` needs square roots and is numeric,
    with the recomposition and orthogonality residuals reported.
    """
    _require_spherical(g, "iwasawa")
    if side not in ("+", "-"):
        raise ValueError("side must be '+' or '-'")
    h = g.matrix.conj_transpose() @ g.matrix
    if side == "+":
        d, u = _ldl_upper(h)
    else:
        d_rev, u_rev = _ldl_upper(_reverse(h))
        d, u = d_rev[::-1], _reverse(u_rev)
    a2 = Matrix.diag(g.ring, d)
    if u.conj_transpose() @ a2 @ u != h:
        raise InternalError("exact factorization of g^* g failed to recompose")
    gu = (g.matrix @ inverse(GroupElement(u, check=False)).matrix).to_float()
    a = np.array([np.sqrt(float(_as_real(x))) for x in d])
    k = gu / a
    gf = g.matrix.to_float()
    recomposed = (k * a) @ u.to_float()
    residual = numeric.max_norm(recomposed - gf)
    ortho = numeric.max_norm(k.conj().T @ k - np.eye(g.n))
    return IwasawaFactors(k, a2, u, side, residual, ortho, tol)


# --------------------------------------------------------------------------
# Birkhoff


@dataclass(frozen=True)
class BirkhoffFactors:
    """Exact factors; ``order == "+-"`` means ``g = u_plus t u_minus``,
    ``order == "-+"`` means ``g = u_minus t u_plus``."""

    u_plus: GroupElement
    t: GroupElement
    u_minus: GroupElement
    order: str = "+-"

    def recompose(self):
        if self.order == "+-":
            return mul(mul(self.u_plus, self.t), self.u_minus)
        return mul(mul(self.u_minus, self.t), self.u_plus)

    def to_json(self):
        return {
            "order": self.order,
            "u_plus": self.u_plus.to_json(),
            "t": self.t.to_json(),
            "u_minus": self.u_minus.to_json(),
        }


def _is_unit(x):
    if isinstance(x, LaurentPoly):
        return x.is_unit()
    return bool(x)


def _ldu(rows, ring, n):
    """``rows = L D U`` with unit pivots; returns (L, D, U) as row lists or the failing index."""
    a = [list(r) for r in rows]
    L = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    U = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    D = []
    for k in range(n):
        p = a[k][k]
        if not _is_unit(p):
            return k, p
        D.append(p)
        inv = LaurentPoly(1).exact_div(p) if isinstance(p, LaurentPoly) else 1 / p
        for i in range(k + 1, n):
            L[i][k] = a[i][k] * inv
            U[k][i] = a[k][i] * inv
        for i in range(k + 1, n):
            lik = L[i][k]
            if not lik:
                continue
            for j in range(k + 1, n):
                a[i][j] = a[i][j] - lik * a[k][j]
    return L, D, U


def birkhoff(g, allow_laurent=True, order="+-"):
    """Exact Birkhoff-type factorization by unit-pivot elimination.

    With the default ``order="+-"`` the factorization is ``g = u+ t u-`` and
    elimination runs from the bottom-right corner (trailing principal
    minors); ``order="-+"`` gives ``g = u- t u+`` from the top-left corner
    (leading principal minors).  Over the Laurent rings every pivot must be a
    unit (a monomial); otherwise :class:`OutsideBigCellError` reports the
    1-based diagonal position of the failing pivot.
    """
    if g.ring.is_laurent and not allow_laurent:
        raise RingMismatchError("Laurent input needs allow_laurent=True")
    if order not in ("+-", "-+"):
        raise ValueError("order must be '+-' or '-+'")
    n, ring = g.n, g.ring
    rows = g.matrix.rows
    if order == "+-":
        rows = tuple(tuple(reversed(r)) for r in reversed(rows))
    res = _ldu(rows, ring, n)
    if len(res) == 2:
        k, p = res
        raise OutsideBigCellError(n - k if order == "+-" else k + 1, p)
    L, D, U = res

    def elem(r):
        return GroupElement(Matrix(ring, tuple(tuple(x) for x in r), trusted=True), g.model, check=False)

    if order == "+-":
        # J g J = L D U  =>  g = (J L J)(J D J)(J U J)
        u_plus = elem([list(reversed(r)) for r in reversed(L)])
        u_minus = elem([list(reversed(r)) for r in reversed(U)])
        t = GroupElement(Matrix.diag(ring, D[::-1]), g.model, check=False)
    else:
        u_minus, u_plus = elem(L), elem(U)
        t = GroupElement(Matrix.diag(ring, D), g.model, check=False)
    out = BirkhoffFactors(u_plus, t, u_minus, order)
    if out.recompose() != g:
        raise InternalError("Birkhoff factors do not recompose")
    return out


# --------------------------------------------------------------------------
# Cartan / polar / KAK


@dataclass(frozen=True)
class CartanFactors:
    """``g = k1 @ diag(a) @ k2`` with ``a`` sorted descending."""

    k1: np.ndarray
    a: np.ndarray
    k2: np.ndarray
    residual: float
    orthogonality: float
    tol: float

    def __iter__(self):
        return iter((self.k1, np.diag(self.a), self.k2))

    @property
    def verified(self):
        return self.residual <= self.tol and self.orthogonality <= self.tol

    def to_json(self):
        return {
            "k1": numeric.to_json(self.k1),
            "a": [numeric.fmt(x) for x in self.a],
            "k2": numeric.to_json(self.k2),
            "residual": numeric.fmt(self.residual),
            "orthogonality": numeric.fmt(self.orthogonality),
        }


def cartan(g, tol=DEFAULT_TOL):
    """Numeric Cartan decomposition via Jacobi on ``g^T g``; both k's are in SO(n)."""
    _require_q(g, "cartan")
    G = g.matrix.to_float()
    w, V = numeric.eigh(G.T @ G)
    if np.linalg.det(V) < 0:
        V[:, -1] = -V[:, -1]
    a = np.sqrt(np.clip(w, 0.0, None))
    k1 = (G @ V) / a
    k2 = V.T
    residual = numeric.max_norm((k1 * a) @ k2 - G)
    eye = np.eye(g.n)
    ortho = max(numeric.max_norm(k1.T @ k1 - eye), numeric.max_norm(k2.T @ k2 - eye))
    return CartanFactors(k1, a, k2, residual, ortho, tol)


@dataclass(frozen=True)
class PolarFactors:
    """``g = p @ k`` with ``p`` symmetric positive definite and ``k`` orthogonal."""

    p: np.ndarray
    k: np.ndarray
    residual: float
    orthogonality: float
    symmetry: float
    leading_minors: tuple
    tol: float

    def __iter__(self):
        return iter((self.p, self.k))

    @property
    def positive_definite(self):
        return all(m > 0 for m in self.leading_minors)

    @property
    def verified(self):
        return (
            self.residual <= self.tol
            and self.orthogonality <= self.tol
            and self.symmetry <= self.tol
            and self.positive_definite
        )

    def to_json(self):
        return {
            "p": numeric.to_json(self.p),
            "k": numeric.to_json(self.k),
            "residual": numeric.fmt(self.residual),
            "orthogonality": numeric.fmt(self.orthogonality),
            "leading_minors": [numeric.fmt(m) for m in self.leading_minors],
        }


def polar(g, tol=DEFAULT_TOL):
    """Numeric polar decomposition ``g = p k`` with ``p = sqrt(g g^T)``."""
    _require_q(g, "polar")
    G = g.matrix.to_float()
    w, V = numeric.eigh(G @ G.T)
    root = np.sqrt(np.clip(w, 0.0, None))
    p = (V * root) @ V.T
    k = (V / root) @ V.T @ G
    residual = numeric.max_norm(p @ k - G)
    ortho = numeric.max_norm(k.T @ k - np.eye(g.n))
    symmetry = numeric.max_norm(p - p.T)
    minors = tuple(float(np.linalg.det(p[:j, :j])) for j in range(1, g.n + 1))
    return PolarFactors(p, k, residual, ortho, symmetry, minors, tol)


@dataclass(frozen=True)
class KAKWord:
    factors: list
    blocks: int
    residual: float
    tol: float

    @property
    def labels(self):
        return [name for name, _ in self.factors]

    @property
    def verified(self):
        return self.residual <= self.tol

    def to_json(self):
        return {
            "word": self.labels,
            "blocks": self.blocks,
            "factors": [{"type": name, "matrix": numeric.to_json(m)} for name, m in self.factors],
            "residual": numeric.fmt(self.residual),
        }


def kak_word(g, tol=DEFAULT_TOL):
    """Express ``g`` as an alternating K/A word (one KAK block in the spherical case)."""
    _require_q(g, "kak_word")
    spec = ThetaSpec.for_element(g)
    G = g.matrix.to_float()
    if is_member(spec, SubsetTag.A, g):
        return KAKWord([("A", G)], 1, 0.0, tol)
    if is_member(spec, SubsetTag.K, g):
        return KAKWord([("K", G)], 1, 0.0, tol)
    c = cartan(g, tol)
    factors = [("K", c.k1), ("A", np.diag(c.a)), ("K", c.k2)]
    return KAKWord(factors, 1, c.residual, tol)


# --------------------------------------------------------------------------
# diagonalizability


class DiagVerdict(Enum):
    DIAGONALIZABLE_NECESSARY_PASS = "DIAGONALIZABLE_NECESSARY_PASS"
    NOT_DIAGONALIZABLE = "NOT_DIAGONALIZABLE"


class DiagReason(Enum):
    NONCONSTANT_CHARPOLY_COEFF = "NONCONSTANT_CHARPOLY_COEFF"
    NO_SPLIT_OVER_F = "NO_SPLIT_OVER_F"
    SPLITS = "SPLITS"


@dataclass(frozen=True)
class DiagCertificate:
    """Outcome of the characteristic-polynomial test.

    ``coefficient`` is the first non-constant coefficient (raw) at
    ``coefficient_index``; ``obstruction`` is the same polynomial with its
    sign normalized so the top coefficient is positive.
    """

    verdict: DiagVerdict
    reason: DiagReason
    charpoly: Poly
    obstruction: object = None
    coefficient: object = None
    coefficient_index: int | None = None
    roots: list = field(default_factory=list)

    def to_json(self):
        out = {"verdict": self.verdict.value, "reason": self.reason.value, "charpoly": self.charpoly.to_json()}
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction.to_json()
            out["obstruction_text"] = str(self.obstruction)
            out["coefficient_index"] = self.coefficient_index
        if self.roots:
            out["roots"] = [str(r) for r in self.roots]
        return out


def _normalize_sign(p):
    lead = p.coeff(p.hi)
    if type(lead) is GaussianRational:
        neg = lead.re < 0 or (not lead.re and lead.im < 0)
    else:
        neg = lead < 0
    return -p if neg else p


def diag_test(g):
    """Necessary condition for ``g`` to be conjugate into the torus T.

    T consists of constant diagonal matrices, so the characteristic
    polynomial of a diagonalizable element has constant coefficients and
    splits over the scalar field.  Passing is necessary, not sufficient.
    """
    cp = charpoly(g)
    for idx, c in enumerate(cp.coeffs):
        if isinstance(c, LaurentPoly) and not c.is_constant():
            return DiagCertificate(
                DiagVerdict.NOT_DIAGONALIZABLE,
                DiagReason.NONCONSTANT_CHARPOLY_COEFF,
                cp,
                obstruction=_normalize_sign(c),
                coefficient=c,
                coefficient_index=idx,
            )
    scalar = cp.map(lambda c: c.constant_value() if isinstance(c, LaurentPoly) else c)
    roots = rational_roots(scalar)
    if len(roots) < scalar.degree:
        return DiagCertificate(DiagVerdict.NOT_DIAGONALIZABLE, DiagReason.NO_SPLIT_OVER_F, cp, roots=roots)
    return DiagCertificate(DiagVerdict.DIAGONALIZABLE_NECESSARY_PASS, DiagReason.SPLITS, cp, roots=roots)


# --------------------------------------------------------------------------
# SL2 square roots


class SqrtVerdict(Enum):
    ROOT_FOUND = "ROOT_FOUND"
    NO_ROOT = "NO_ROOT"


@dataclass(frozen=True)
class SqrtCertificate:
    """Decision for ``h^2 = v`` with ``h`` in SL_2 and theta-symmetric.

    ``obstruction`` is ``tr(v) + 2`` when no root exists.  ``field_robust``
    is true when the negative answer persists over R (resp. C), i.e. it does
    not hinge on an irrational square root of a leading coefficient.
    """

    verdict: SqrtVerdict
    root: GroupElement | None
    obstruction: object
    reason: str
    field_robust: bool = True

    def to_json(self):
        out = {"verdict": self.verdict.value, "reason": self.reason, "field_robust": self.field_robust}
        if self.root is not None:
            out["root"] = self.root.to_json()
        if self.obstruction is not None:
            out["obstruction"] = _encode_element(self.obstruction)
            out["obstruction_text"] = str(self.obstruction)
        return out


def _encode_element(x):
    return x.to_json() if isinstance(x, LaurentPoly) else str(x)


def _sqrt_failure_robust(x, conjugating):
    """Would the missing square root of ``x`` also be missing over R / C?"""
    if isinstance(x, LaurentPoly):
        if x.lo % 2 or x.hi % 2:
            return True
        lead = x.coeff(x.hi)
    else:
        lead = x
    if scalar_sqrt(lead) is not None:
        # leading root is rational, so the coefficient recursion is field independent
        return True
    if conjugating:
        return False
    return _as_real(lead) < 0


def sl2_sqrt(v):
    """Decide whether a theta-symmetric ``v`` in SL_2 has a theta-symmetric square root.

    Cayley-Hamilton for ``h`` in SL_2 gives ``h^2 + I = tr(h) h``, so
    ``h^2 = v`` forces ``v + I = s h`` with ``s^2 = tr(v) + 2``.  The decision
    reduces to a square root of ``tr(v) + 2`` in the ring and an exact
    division; both signs of ``s`` are tried.  The branch ``s = 0`` would need
    ``h^2 = -I``, which no theta-symmetric ``h`` satisfies.
    """
    if v.n != 2:
        raise BadDimensionError("sl2_sqrt needs a 2x2 element")
    spec = ThetaSpec.for_element(v)
    if not is_member(spec, SubsetTag.Q, v):
        raise NotSymmetricError("v is not theta-symmetric")
    ring = v.ring
    s2 = v.matrix.trace() + 2
    if not s2:
        return SqrtCertificate(SqrtVerdict.NO_ROOT, None, s2, "TRACE_ZERO_BRANCH")
    s = laurent_sqrt(s2) if ring.is_laurent else scalar_sqrt(s2)
    if s is None:
        robust = _sqrt_failure_robust(s2, ring.conjugating)
        return SqrtCertificate(SqrtVerdict.NO_ROOT, None, s2, "TRACE_NOT_A_SQUARE", robust)
    vi = v.matrix + Matrix.identity(ring, 2)
    for cand in (s, -s):
        try:
            rows = tuple(
                tuple(x.exact_div(cand) if isinstance(x, LaurentPoly) else x / cand for x in row) for row in vi.rows
            )
        except InexactDivisionError:
            continue
        h = GroupElement(Matrix(ring, rows, trusted=True), v.model, check=False)
        if det(h.matrix) != 1 or mul(h, h) != v:
            continue
        if theta(spec, h) != inverse(h):
            continue
        return SqrtCertificate(SqrtVerdict.ROOT_FOUND, h, None, "TRACE_IDENTITY")
    return SqrtCertificate(SqrtVerdict.NO_ROOT, None, s2, "NO_SYMMETRIC_ROOT")


# --------------------------------------------------------------------------
# nucleus


class NucleusVerdict(Enum):
    IN_NUCLEUS = "IN_NUCLEUS"
    NOT_IN_NUCLEUS = "NOT_IN_NUCLEUS"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class NucleusCertificate:
    verdict: NucleusVerdict
    model: Model
    route: str
    chain: list = field(default_factory=list)
    residuals: list = field(default_factory=list)
    diag: DiagCertificate | None = None
    sqrt: SqrtCertificate | None = None
    routes_agree: bool = True
    witness: GroupElement | None = None

    @property
    def verified(self):
        return self.routes_agree

    def to_json(self):
        out = {"verdict": self.verdict.value, "model": self.model.value, "route": self.route}
        if self.chain:
            out["chain"] = [numeric.to_json(h) for h in self.chain]
            out["residuals"] = [numeric.fmt(r) for r in self.residuals]
        if self.diag is not None:
            out["diag_test"] = self.diag.to_json()
        if self.sqrt is not None:
            out["sl2_sqrt"] = self.sqrt.to_json()
        if self.witness is not None:
            out["g"] = self.witness.to_json()
        out["routes_agree"] = self.routes_agree
        return out


def _leading_minors_positive(m):
    for j in range(1, m.n + 1):
        sub = Matrix(m.ring, tuple(r[:j] for r in m.rows[:j]), trusted=True)
        if not _positive(det(sub)):
            return False
    return True


def nucleus_member(v, g=None, depth=8, tol=1e-8):
    """Decide membership of ``v`` (an element of tau(G)) in the nucleus of tau(G).

    Spherical model: every positive definite ``v`` lies in the nucleus; the
    certificate is a chain of ``depth`` numeric square roots, each within
    ``tol`` relative max-norm residual.

    Affine model: ``diag_test`` failing proves ``v`` is outside the nucleus
    (the nucleus consists of the diagonalizable elements).  For 2x2 inputs a
    field-robust ``NO_ROOT`` from :func:`sl2_sqrt` is an independent second
    route.  Membership is certified for constant positive definite ``v``,
    which are K-conjugate into A; other passing inputs stay INCONCLUSIVE.
    """
    if g is not None and tau(ThetaSpec.for_element(g), g) != v:
        raise NotInTauGError("tau(g) != v")
    spec = ThetaSpec.for_element(v)
    if not is_member(spec, SubsetTag.Q, v):
        raise NotInTauGError("v is not theta-symmetric")
    if v.model is Model.SPHERICAL:
        if not _leading_minors_positive(v.matrix):
            raise NotInTauGError("v is not positive definite")
        h = v.matrix.to_float()
        chain, residuals = [], []
        for _ in range(depth):
            r = numeric.psd_sqrt(h)
            residuals.append(numeric.max_norm(r @ r - h) / numeric.max_norm(h))
            chain.append(r)
            h = r
        ok = all(x <= tol for x in residuals)
        verdict = NucleusVerdict.IN_NUCLEUS if ok else NucleusVerdict.INCONCLUSIVE
        return NucleusCertificate(verdict, v.model, "SQRT_CHAIN", chain, residuals, routes_agree=ok, witness=g)

    cert = diag_test(v)
    sq = sl2_sqrt(v) if v.n == 2 else None
    sq_says_no = sq is not None and sq.verdict is SqrtVerdict.NO_ROOT and sq.field_robust
    if cert.verdict is DiagVerdict.NOT_DIAGONALIZABLE:
        agree = sq is None or sq_says_no
        return NucleusCertificate(
            NucleusVerdict.NOT_IN_NUCLEUS, v.model, "DIAG_TEST", diag=cert, sqrt=sq, routes_agree=agree, witness=g
        )
    constant = all(not isinstance(x, LaurentPoly) or x.is_constant() for row in v.matrix.rows for x in row)
    if constant and _leading_minors_positive(v.matrix):
        return NucleusCertificate(
            NucleusVerdict.IN_NUCLEUS,
            v.model,
            "CONSTANT_POSITIVE_DEFINITE",
            diag=cert,
            sqrt=sq,
            routes_agree=not sq_says_no,
            witness=g,
        )
    verdict = NucleusVerdict.NOT_IN_NUCLEUS if sq_says_no else NucleusVerdict.INCONCLUSIVE
    return NucleusCertificate(verdict, v.model, "SL2_SQRT" if sq_says_no else "NONE", diag=cert, sqrt=sq, witness=g)


# --------------------------------------------------------------------------
# the non-diagonalizable witness


@dataclass(frozen=True)
class HoleWitness:
    u: GroupElement
    v: GroupElement
    charpoly: Poly
    expected_charpoly: Poly

    @property
    def matches(self):
        return self.charpoly == self.expected_charpoly

    def to_json(self):
        return {
            "u": self.u.to_json(),
            "v": self.v.to_json(),
            "charpoly": self.charpoly.to_json(),
            "expected_charpoly": self.expected_charpoly.to_json(),
            "matches": self.matches,
        }


def hole_quadratic(var="λ"):
    """``λ^2 - (t + 4 + t^-1) λ + 1``."""
    return Poly([LaurentPoly(1), -LaurentPoly({1: 1, 0: 4, -1: 1}), LaurentPoly(1)], var)


def hole_witness(n, ring=Ring.LAURENT_Q):
    """Witness in SL_{n+1}(F[t, t^-1]) (type affine A_n), ``n >= 1``.

    ``u = I + (1 + t) E_12``, ``v = tau(u)``; the characteristic polynomial of
    ``v`` is checked exactly against ``(λ^2 - (t+4+t^-1) λ + 1)(λ - 1)^(n-1)``.
    """
    if n < 1:
        raise BadDimensionError("need n >= 1 (matrices of size n + 1)")
    dim = n + 1
    u = mul(
        chevalley_generator(Model.AFFINE, dim, 1, 2, 0, 1, ring),
        chevalley_generator(Model.AFFINE, dim, 1, 2, 1, 1, ring),
    )
    v = tau(ThetaSpec.for_ring(ring), u)
    cp = charpoly(v)
    expected = hole_quadratic() * Poly([LaurentPoly(-1), LaurentPoly(1)]) ** (n - 1)
    witness = HoleWitness(u, v, cp, expected)
    if not witness.matches:
        raise InternalError(f"charpoly {cp} != closed form {expected}")
    return witness
