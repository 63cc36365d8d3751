# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

import fractions
import typing


def _monomial(
    var: str,
    exponent: int,
) -> str:
    if exponent == 0:
        return ""
    elif exponent == 1:
        return var
    else:
        return "%s^%d" % (var, exponent)


def format_poly(
    coeffs: typing.Sequence[int],
    var: str = "x",
) -> str:
    """Renders dense integer coefficients, highest degree first, in the polynomial grammar.

    The output is accepted by :func:`montes_lite.zxpoly.parse_poly` so printing and parsing round trip.
    """
    degree = len(coeffs) - 1
    terms = []
    for idx, coeff in enumerate(coeffs):
        if coeff == 0:
            continue

        exponent = degree - idx
        magnitude = abs(coeff)
        monomial = _monomial(var, exponent)
        body = monomial if magnitude == 1 and monomial else "%d%s" % (magnitude, monomial)

        if not terms:
            terms.append("-%s" % body if coeff < 0 else body)
        else:
            terms.append("%s %s" % ("-" if coeff < 0 else "+", body))

    return " ".join(terms) if terms else "0"


def format_nested_poly(
    coeffs: typing.Sequence[str],
    var: str = "y",
) -> str:
    """Renders a polynomial whose coefficients are already rendered, highest degree first.

    Used for polynomials over F_p[x]/(phi) where each coefficient is itself a polynomial in x. Zero coefficients are
    passed as ``"0"`` and skipped.
    """
    degree = len(coeffs) - 1
    terms = []
    for idx, coeff in enumerate(coeffs):
        if coeff == "0":
            continue

        exponent = degree - idx
        monomial = _monomial(var, exponent)
        if not monomial:
            terms.append(coeff)
        elif coeff == "1":
            terms.append(monomial)
        elif " " in coeff:
            terms.append("(%s)*%s" % (coeff, monomial))
        else:
            terms.append("%s*%s" % (coeff, monomial))

    return " + ".join(terms) if terms else "0"


def format_slope(slope: fractions.Fraction) -> str:
    """Renders a slope ``-h/e`` with a unicode minus, ``0`` for horizontal sides."""
    if slope == 0:
        return "0"

    sign = "−" if slope < 0 else ""
    return "%s%d/%d" % (sign, abs(slope.numerator), slope.denominator)
