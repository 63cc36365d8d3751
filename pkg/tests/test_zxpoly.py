# -*- coding: utf-8 -*-
# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

import re

import pytest

import montes_lite.zxpoly as zxpoly
from montes_lite.arith import INFINITY
from montes_lite.exceptions import DomainError, OutOfRangeError, PolynomialSyntaxError
from montes_lite.ffpoly import FpPoly

from .conftest import poly


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x^30 - 7", (1,) + (0,) * 29 + (-7,)),
        ("x^30+7", (1,) + (0,) * 29 + (7,)),
        ("2x^2 + 3*x + 1", (2, 3, 1)),
        ("-x + 1", (-1, 1)),
        ("x^2 + x^2", (2, 0, 0)),
        ("1 + x^3", (1, 0, 0, 1)),
        ("5", (5,)),
        ("  x  ", (1, 0)),
    ],
)
def test_parse_poly(text, expected):
    assert zxpoly.parse_poly(text) == zxpoly.ZxPoly(expected)


def test_parse_poly_cancels_to_zero():
    actual = zxpoly.parse_poly("x - x")

    assert actual.is_zero
    assert actual.degree == -1
    assert str(actual) == "0"


def test_parse_poly_offset():
    with pytest.raises(PolynomialSyntaxError) as e:
        zxpoly.parse_poly("x + y")

    assert e.value.offset == 4
    assert "cannot parse 'x + y' at offset 4" in str(e.value)


@pytest.mark.parametrize("text", ["", "x^", "x +", "2 3"])
def test_parse_poly_invalid(text):
    with pytest.raises(PolynomialSyntaxError):
        zxpoly.parse_poly(text)


def test_parse_poly_degree_limit():
    expected = "degree 100001 exceeds the parser limit 100000"
    with pytest.raises(OutOfRangeError, match=re.escape(expected)):
        zxpoly.parse_poly("x^100001")


def test_zxpoly_leading_zero():
    with pytest.raises(DomainError, match=re.escape("leading coefficient of a ZxPoly must be non-zero")):
        zxpoly.ZxPoly((0, 1))


def test_zxpoly_from_ints_strips():
    assert zxpoly.ZxPoly.from_ints([0, 0, 3, -1]) == zxpoly.ZxPoly((3, -1))
    assert zxpoly.ZxPoly.from_ints([0, 0]).is_zero


def test_zxpoly_pure():
    actual = zxpoly.ZxPoly.pure(3, 2)

    assert actual == zxpoly.ZxPoly((1, 0, 0, -2))
    assert actual.degree == 3
    assert actual.is_monic
    assert str(actual) == "x^3 - 2"


def test_zxpoly_arithmetic():
    a = poly("x + 1")
    b = poly("x - 1")

    assert a * b == poly("x^2 - 1")
    assert a + b == poly("2x")
    assert a - b == poly("2")
    assert (a - a).is_zero


@pytest.mark.parametrize(
    "text, p, expected",
    [
        ("4x^2 + 8x + 12", 2, 2),
        ("x^2 + 3", 2, 0),
        ("-135x", 3, 3),
        ("-135x", 5, 1),
    ],
)
def test_content_valuation(text, p, expected):
    assert poly(text).content_valuation(p) == expected


def test_content_valuation_zero():
    assert zxpoly.ZxPoly(()).content_valuation(2) == INFINITY


def test_reduce_mod_p_and_lift():
    reduced = zxpoly.reduce_mod_p(poly("x^2 - 7"), 2)

    assert reduced == FpPoly(2, (1, 0, 1))
    assert zxpoly.lift(reduced) == poly("x^2 + 1")
    assert zxpoly.reduce_mod_p(poly("2x + 1"), 2) == FpPoly(2, (1,))


def test_phi_expand_linear():
    actual = zxpoly.phi_expand(poly("x^2 + 3"), poly("x + 1"))

    assert actual.length == 2
    assert actual.terms == (poly("4"), poly("-2"), poly("1"))
    assert actual.reconstruct() == poly("x^2 + 3")


def test_phi_expand_pure_quadratic_phi():
    f = poly("x^30 + 7")
    actual = zxpoly.phi_expand(f, poly("x^2 + x + 1"))

    assert actual.length == 15
    assert actual.terms[0] == poly("8")
    assert actual.terms[1] == poly("10x - 10")
    assert actual.terms[2] == poly("-135x")
    assert actual.terms[15] == poly("1")
    assert actual.reconstruct() == f


def test_phi_expand_phi_itself():
    actual = zxpoly.phi_expand(poly("x^2 + x + 1"), poly("x^2 + x + 1"))

    assert actual.terms == (zxpoly.ZxPoly(()), poly("1"))


@pytest.mark.parametrize(
    "f, phi, expected",
    [
        ("x^2 + 1", "2x + 1", "phi-expansion needs a monic phi of degree >= 1, got 2x + 1"),
        ("x^2 + 1", "1", "phi-expansion needs a monic phi of degree >= 1, got 1"),
        ("x - x", "x + 1", "cannot expand the zero polynomial"),
    ],
)
def test_phi_expand_invalid(f, phi, expected):
    with pytest.raises(DomainError, match=re.escape(expected)):
        zxpoly.phi_expand(poly(f), poly(phi))


def test_phi_expansion_invalid_digits():
    with pytest.raises(DomainError, match=re.escape("digit x + 1 is not reduced modulo x + 1")):
        zxpoly.PhiExpansion(poly("x + 1"), (poly("x + 1"), poly("1")))

    with pytest.raises(DomainError, match=re.escape("the last digit of a phi-expansion must be non-zero")):
        zxpoly.PhiExpansion(poly("x + 1"), (poly("1"), zxpoly.ZxPoly(())))


def test_phi_remainder():
    assert zxpoly.phi_remainder(poly("x^2 + 3"), poly("x + 1")) == poly("4")
    assert zxpoly.phi_remainder(poly("x^30 + 7"), poly("x^2 + x + 1")) == poly("8")

    with pytest.raises(DomainError):
        zxpoly.phi_remainder(poly("x^2 + 3"), poly("3x + 1"))


def test_sylvester_matrix():
    actual = zxpoly.sylvester_matrix(poly("x^2 + 1"), poly("2x"))

    assert actual == [
        [1, 0, 1],
        [2, 0, 0],
        [0, 2, 0],
    ]


def test_resultant():
    assert zxpoly.resultant(poly("x - 2"), poly("x - 3")) == -1


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x^2 + 1", -4),
        ("x^2 + 3", -12),
        ("x^3 - 2", -108),
        ("x^2 + x + 1", -3),
    ],
)
def test_discriminant(text, expected):
    assert zxpoly.discriminant(poly(text)) == expected


@pytest.mark.parametrize("text", ["x + 1", "2x^2 + 1"])
def test_discriminant_invalid(text):
    with pytest.raises(DomainError, match=re.escape("discriminant needs a monic polynomial of degree >= 2")):
        zxpoly.discriminant(poly(text))


@pytest.mark.parametrize(
    "n, m",
    [(30, m) for m in [2, -2, 7, -7, 10, -10]] + [(60, 2), (60, -2), (90, 7)],
)
def test_discriminant_pure_identity(n, m):
    # disc(x^n + a) = (-1)^(n(n-1)/2) * n^n * a^(n-1) with a = -m
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    expected = sign * n**n * (-m) ** (n - 1)

    actual = zxpoly.discriminant(zxpoly.ZxPoly.pure(n, m))

    assert actual == expected
    assert abs(actual) == n**n * abs(m) ** (n - 1)


def _random_zx(rng, degree, monic=False):
    lead = 1 if monic else rng.choice([c for c in range(-9, 10) if c])
    return zxpoly.ZxPoly((lead,) + tuple(rng.randint(-50, 50) for _ in range(degree)))


def test_phi_expand_reconstructs_random(rng):
    for _ in range(200):
        f = _random_zx(rng, rng.randint(0, 15))
        phi = _random_zx(rng, rng.randint(1, 4), monic=True)

        actual = zxpoly.phi_expand(f, phi)

        assert actual.reconstruct() == f
        assert actual.length == f.degree // phi.degree
        assert not actual.terms[-1].is_zero
        assert all(t.degree < phi.degree for t in actual.terms)


def test_parse_print_round_trip_random(rng):
    for _ in range(100):
        f = _random_zx(rng, rng.randint(0, 20))
        # Sprinkle zero coefficients so gaps in the exponents get printed too.
        f = zxpoly.ZxPoly(tuple(c if rng.random() < 0.6 or i == 0 else 0 for i, c in enumerate(f.coeffs)))

        assert zxpoly.parse_poly(str(f)) == f
