import math
import random
from fractions import Fraction

import numpy as np
import pytest
from conftest import element_seeds
from hypothesis import given

from kmdecomp.decomp import (
    DiagReason,
    DiagVerdict,
    NucleusVerdict,
    SqrtVerdict,
    birkhoff,
    cartan,
    diag_test,
    hole_quadratic,
    hole_witness,
    iwasawa,
    kak_word,
    nucleus_member,
    polar,
    sl2_sqrt,
)
from kmdecomp.errors import (
    BadDimensionError,
    NotInTauGError,
    NotSymmetricError,
    OutsideBigCellError,
    RingMismatchError,
)
from kmdecomp.involution import SubsetTag, ThetaSpec, is_member, tau
from kmdecomp.matgrp import GroupElement, Matrix, mul, random_bounded_element, random_group_element
from kmdecomp.ring import LaurentPoly, Poly, Ring

T = LaurentPoly.t()
Q = Ring.Q


def g2(rows, ring=Q):
    return GroupElement.from_rows(ring, rows)


# --- Iwasawa -----------------------------------------------------------------


def test_iwasawa_lower_unipotent_example():
    f = iwasawa(g2([[1, 0], [1, 1]]))
    assert f.a_squared == Matrix.diag(Q, [2, Fraction(1, 2)])
    assert f.u == Matrix(Q, [[1, Fraction(1, 2)], [0, 1]])
    s = 1 / math.sqrt(2)
    assert np.allclose(f.k, [[s, -s], [s, s]], atol=1e-12)
    assert f.verified


def test_iwasawa_trivial_cases():
    u = g2([[1, 1], [0, 1]])
    f = iwasawa(u)
    assert f.u == u.matrix and f.a_squared == Matrix.identity(Q, 2)
    assert np.allclose(f.k, np.eye(2))
    f = iwasawa(GroupElement.identity(Q, 3))
    assert f.u == Matrix.identity(Q, 3)


@given(seed=element_seeds())
def test_iwasawa_properties(seed):
    g = random_bounded_element(random.Random(seed), 3)
    f = iwasawa(g)
    assert f.verified
    assert f.u.is_upper_triangular() and f.u.has_unit_diagonal()
    d = f.a_squared.diagonal()
    assert all(x > 0 for x in d) and math.prod(d) == 1
    again = iwasawa(g)
    assert (again.a_squared, again.u) == (f.a_squared, f.u)


@given(seed=element_seeds())
def test_iwasawa_minus_side(seed):
    g = random_bounded_element(random.Random(seed), 3)
    f = iwasawa(g, side="-")
    assert f.verified
    assert f.u.is_lower_triangular() and f.u.has_unit_diagonal()


def test_iwasawa_over_gaussian_rationals():
    rng = random.Random(3)
    for _ in range(10):
        g = random_group_element(rng, Ring.QI, 3)
        assert iwasawa(g).verified


# --- Birkhoff ----------------------------------------------------------------


@pytest.mark.parametrize("ring", [Ring.Q, Ring.QI, Ring.LAURENT_Q, Ring.LAURENT_QI])
@given(seed=element_seeds())
def test_birkhoff_recomposes_and_is_unique(ring, seed):
    g = random_group_element(random.Random(seed), ring, 3)
    for order in ("+-", "-+"):
        try:
            f = birkhoff(g, order=order)
        except OutsideBigCellError as exc:
            assert 1 <= exc.index <= 3
            continue
        assert f.recompose() == g
        assert f.u_plus.matrix.is_upper_triangular() and f.u_plus.matrix.has_unit_diagonal()
        assert f.u_minus.matrix.is_lower_triangular() and f.u_minus.matrix.has_unit_diagonal()
        assert f.t.matrix.is_diagonal()
        assert birkhoff(g, order=order) == f


def test_birkhoff_hole_v():
    v = hole_witness(1).v
    f = birkhoff(v)
    u = GroupElement.from_rows(Ring.LAURENT_Q, [[1, 1 + T], [0, 1]])
    assert f.u_plus == u and f.t.is_identity()
    with pytest.raises(OutsideBigCellError) as exc:
        birkhoff(v, order="-+")
    assert exc.value.index == 1
    assert exc.value.pivot == T + 3 + T**-1


def test_birkhoff_outside_big_cell():
    w = g2([[0, 1], [-1, 0]])
    with pytest.raises(OutsideBigCellError) as exc:
        birkhoff(w, order="-+")
    assert exc.value.index == 1
    with pytest.raises(OutsideBigCellError) as exc:
        birkhoff(w)
    assert exc.value.index == 2
    with pytest.raises(RingMismatchError):
        birkhoff(hole_witness(1).v, allow_laurent=False)


# --- Cartan, polar, KAK ------------------------------------------------------


def test_cartan_examples():
    c = cartan(g2([[4, 0], [0, Fraction(1, 4)]]))
    assert np.allclose(c.a, [4, 0.25])
    assert np.allclose(np.abs(c.k1), np.eye(2)) and np.allclose(np.abs(c.k2), np.eye(2))
    phi = (1 + math.sqrt(5)) / 2
    c = cartan(g2([[1, 1], [0, 1]]))
    assert np.allclose(c.a, [phi, 1 / phi], atol=1e-12)
    assert c.verified
    assert np.linalg.det(c.k1) > 0 and np.linalg.det(c.k2) > 0


def test_polar_examples():
    rot = g2([[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]])
    p = polar(rot)
    assert np.allclose(p.p, np.eye(2)) and np.allclose(p.k, rot.matrix.to_float())
    p = polar(g2([[9, 0], [0, Fraction(1, 9)]]))
    assert np.allclose(p.p, np.diag([9, 1 / 9])) and np.allclose(p.k, np.eye(2))
    p = polar(g2([[1, 1], [0, 1]]))
    assert np.allclose(p.p @ p.p, [[2, 1], [1, 1]], atol=1e-12)
    assert p.verified and p.positive_definite


@given(seed=element_seeds())
def test_cartan_polar_random(seed):
    g = random_bounded_element(random.Random(seed), 3)
    assert cartan(g).verified
    assert polar(g).verified


def test_cartan_needs_rationals():
    with pytest.raises(RingMismatchError):
        cartan(GroupElement.identity(Ring.QI, 2))


def test_kak_words():
    assert kak_word(g2([[2, 0], [0, Fraction(1, 2)]])).labels == ["A"]
    rot = g2([[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]])
    assert kak_word(rot).labels == ["K"]
    w = kak_word(g2([[1, 1], [0, 1]]))
    assert w.labels == ["K", "A", "K"] and w.blocks == 1 and w.verified


# --- affine certificates ---------------------------------------------------------


def test_diag_test_examples():
    cert = diag_test(hole_witness(1).v)
    assert cert.verdict is DiagVerdict.NOT_DIAGONALIZABLE
    assert cert.reason is DiagReason.NONCONSTANT_CHARPOLY_COEFF
    assert cert.obstruction == T + 4 + T**-1
    cert = diag_test(GroupElement.diag(Ring.LAURENT_Q, [T, T**-1]))
    assert cert.verdict is DiagVerdict.NOT_DIAGONALIZABLE
    assert cert.coefficient == -(T + T**-1)
    cert = diag_test(GroupElement.diag(Ring.LAURENT_Q, [2, Fraction(1, 2)]))
    assert cert.verdict is DiagVerdict.DIAGONALIZABLE_NECESSARY_PASS
    assert cert.roots == [Fraction(1, 2), 2]


def test_diag_test_no_split():
    rot = GroupElement.from_rows(Ring.LAURENT_Q, [[0, 1], [-1, 0]])
    cert = diag_test(rot)
    assert cert.reason is DiagReason.NO_SPLIT_OVER_F
    assert diag_test(GroupElement.from_rows(Ring.LAURENT_QI, [[0, 1], [-1, 0]])).verdict is (
        DiagVerdict.DIAGONALIZABLE_NECESSARY_PASS
    )


def test_sl2_sqrt_examples():
    cert = sl2_sqrt(hole_witness(1).v)
    assert cert.verdict is SqrtVerdict.NO_ROOT
    assert cert.obstruction == T + 6 + T**-1
    assert cert.field_robust
    v = GroupElement.diag(Ring.LAURENT_Q, [4, Fraction(1, 4)])
    cert = sl2_sqrt(v)
    assert cert.verdict is SqrtVerdict.ROOT_FOUND
    assert cert.root == GroupElement.diag(Ring.LAURENT_Q, [2, Fraction(1, 2)])
    assert sl2_sqrt(GroupElement.identity(Ring.LAURENT_Q, 2)).root.is_identity()


@pytest.mark.parametrize("ring", [Ring.Q, Ring.QI, Ring.LAURENT_Q, Ring.LAURENT_QI])
@given(seed=element_seeds())
def test_sl2_sqrt_finds_planted_roots(ring, seed):
    spec = ThetaSpec.for_ring(ring)
    h = tau(spec, random_group_element(random.Random(seed), ring, 2))
    v = mul(h, h)
    cert = sl2_sqrt(v)
    assert cert.verdict is SqrtVerdict.ROOT_FOUND
    assert mul(cert.root, cert.root) == v
    assert is_member(spec, SubsetTag.Q, cert.root)


def test_sl2_sqrt_errors():
    with pytest.raises(BadDimensionError):
        sl2_sqrt(GroupElement.identity(Ring.LAURENT_Q, 3))
    with pytest.raises(NotSymmetricError):
        sl2_sqrt(GroupElement.from_rows(Ring.LAURENT_Q, [[1, 1 + T], [0, 1]]))


def test_nucleus_affine():
    w = hole_witness(1)
    cert = nucleus_member(w.v, w.u)
    assert cert.verdict is NucleusVerdict.NOT_IN_NUCLEUS and cert.routes_agree
    assert nucleus_member(GroupElement.identity(Ring.LAURENT_Q, 2)).verdict is NucleusVerdict.IN_NUCLEUS
    with pytest.raises(NotInTauGError):
        nucleus_member(w.v, GroupElement.identity(Ring.LAURENT_Q, 2))


def test_nucleus_spherical_example():
    v = g2([[16, 0], [0, Fraction(1, 16)]])
    cert = nucleus_member(v)
    assert cert.verdict is NucleusVerdict.IN_NUCLEUS
    assert np.allclose(cert.chain[0], np.diag([4, 0.25]))
    assert np.allclose(cert.chain[1], np.diag([2, 0.5]))
    assert len(cert.chain) == 8


@given(seed=element_seeds())
def test_nucleus_spherical_random(seed):
    g = random_bounded_element(random.Random(seed), 3)
    v = tau(ThetaSpec.for_ring(Q), g)
    cert = nucleus_member(v, g)
    assert cert.verdict is NucleusVerdict.IN_NUCLEUS
    assert max(cert.residuals) <= 1e-8


@pytest.mark.parametrize("n", range(1, 6))
def test_hole_closed_form(n):
    w = hole_witness(n)
    expected = hole_quadratic() * Poly([LaurentPoly(-1), LaurentPoly(1)]) ** (n - 1)
    assert w.charpoly == expected
    assert w.v.matrix[0, 0] == T + 3 + T**-1
    assert w.v.n == n + 1


def test_hole_rejects_bad_dimension():
    with pytest.raises(BadDimensionError):
        hole_witness(0)
