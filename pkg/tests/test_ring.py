from fractions import Fraction

import pytest
import sympy
from conftest import fractions, gaussians, laurent_polys
from hypothesis import given
from hypothesis import strategies as st

from kmdecomp.errors import InexactDivisionError, ZeroPolynomialError
from kmdecomp.ring import (
    GaussianRational,
    LaurentPoly,
    Poly,
    Ring,
    decode_scalar,
    encode_scalar,
    laurent_sqrt,
    rational_roots,
    rho,
    scalar_sqrt,
    sigma,
)

T = LaurentPoly.t()


# --- scalars ---------------------------------------------------------------


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(gaussians, gaussians)
def test_conjugation_is_a_field_automorphism(a, b):
    assert sigma(a * b) == sigma(a) * sigma(b)
    assert sigma(a + b) == sigma(a) + sigma(b)
    assert sigma(sigma(a)) == a
    assert a * sigma(a) == a.norm()


@given(fractions)
def test_real_gaussian_equals_fraction(x):
    g = GaussianRational(x, 0)
    assert g == x
    assert hash(g) == hash(x)


@given(st.one_of(fractions, gaussians))
def test_scalar_encoding_round_trip(x):
    gaussian = isinstance(x, GaussianRational)
    assert decode_scalar(encode_scalar(x), gaussian) == x


def test_scalar_encoding_examples():
    assert encode_scalar(Fraction(-3, 4)) == "-3/4"
    assert encode_scalar(GaussianRational(1, -2)) == "1-2*i"
    assert decode_scalar("2+i", True) == GaussianRational(2, 1)
    assert decode_scalar("-i", True) == GaussianRational(0, -1)
    with pytest.raises(ValueError):
        decode_scalar("1+i", False)


@given(st.one_of(fractions, gaussians))
def test_scalar_sqrt_of_square(x):
    r = scalar_sqrt(x * x)
    assert r is not None and r * r == x * x


def test_scalar_sqrt_absent():
    assert scalar_sqrt(Fraction(2)) is None
    assert scalar_sqrt(Fraction(-1)) is None
    assert scalar_sqrt(GaussianRational(-1, 0)) == GaussianRational(0, 1)
    assert scalar_sqrt(GaussianRational(0, 2)) == GaussianRational(1, 1)


# --- Laurent polynomials -------------------------------------------------------


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_laurent_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == LaurentPoly()


@given(laurent_polys(gaussian=True), laurent_polys(gaussian=True))
def test_involutions_are_ring_maps(p, q):
    assert rho(p * q) == rho(p) * rho(q)
    assert sigma(p * q) == sigma(p) * sigma(q)
    assert rho(rho(p)) == p
    assert sigma(rho(p)) == rho(sigma(p))


@given(laurent_polys(), laurent_polys())
def test_exact_division_recovers_factor(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        (T + 1).exact_div(T + 2)


@given(laurent_polys())
def test_laurent_sqrt_of_square(p):
    r = laurent_sqrt(p * p)
    assert r is not None and r * r == p * p


def test_laurent_sqrt_obstructions():
    assert laurent_sqrt(T + 6 + T**-1) is None  # odd span
    assert laurent_sqrt(T**2 + 2 * T + 1) == T + 1
    assert laurent_sqrt(2 * T**2) is None


def test_units_and_powers():
    assert (3 * T**-2).is_unit()
    assert not (T + 1).is_unit()
    assert (2 * T) ** -1 == Fraction(1, 2) * T**-1


def test_laurent_printing_and_json():
    p = T + 4 + T**-1
    assert str(p) == "t + 4 + t^-1"
    assert p.to_json() == {"-1": "1", "0": "4", "1": "1"}
    assert LaurentPoly.from_json(p.to_json()) == p


@given(laurent_polys(gaussian=True))
def test_laurent_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json(), gaussian=True) == p


# --- polynomials and rational roots ------------------------------------------


def test_charpoly_text_format():
    quad = Poly([LaurentPoly(1), -(T + 4 + T**-1), LaurentPoly(1)])
    assert str(quad) == "λ^2 + (-t - 4 - t^-1)*λ + 1"


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=1, max_size=4))
def test_rational_roots_recover_planted_roots(roots):
    p = Poly.from_roots(roots) * Poly([1, 0, 1])
    assert rational_roots(p) == sorted(roots)


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=6))
def test_rational_roots_match_factorization(coeffs):
    p = Poly([Fraction(c) for c in coeffs])
    if p.degree < 1:
        return
    x = sympy.Symbol("x")
    expr = sympy.Poly(list(reversed(coeffs)), x)
    expected = []
    for root, mult in sympy.roots(expr, filter="Q").items():
        expected += [Fraction(int(sympy.numer(root)), int(sympy.denom(root)))] * mult
    assert rational_roots(p) == sorted(expected)


def test_gaussian_roots():
    i = GaussianRational(0, 1)
    p = Poly([GaussianRational(1), 0, GaussianRational(1)])
    assert rational_roots(p) == [-i, i]
    assert rational_roots(Poly([Fraction(1), 0, Fraction(1)])) == []


def test_zero_polynomial_has_no_root_set():
    with pytest.raises(ZeroPolynomialError):
        rational_roots(Poly([0, 0]))


@pytest.mark.parametrize("ring", list(Ring))
def test_ring_tags(ring):
    assert ring.decode(ring.encode(ring.one())) == ring.one()
    assert ring.zero() == 0 or ring.zero().is_zero()
    assert ring.is_laurent == ring.value.startswith("laurent")
