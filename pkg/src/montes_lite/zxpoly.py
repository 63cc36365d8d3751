# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""Integer polynomials: parsing, reduction mod p, phi-adic expansion and discriminants.

Coefficients are stored densely, highest degree first, which is the layout of the ``dup_*`` kernels in
:mod:`sympy.polys.densearith` that do the arithmetic.
"""

import collections
import dataclasses
import logging
import typing

import lark
from lark.exceptions import UnexpectedInput
from sympy.polys.densearith import dup_add, dup_div, dup_mul, dup_rem, dup_sub
from sympy.polys.densetools import dup_diff
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from montes_lite._text import format_poly
from montes_lite.arith import INFINITY, Valuation, vp
from montes_lite.exceptions import DomainError, OutOfRangeError, PolynomialSyntaxError
from montes_lite.ffpoly import FpPoly

log = logging.getLogger(__name__)

#: Largest exponent accepted by the parser, dense storage grows linearly with it.
MAX_PARSE_DEGREE = 100000

_GRAMMAR = r"""
    poly: sign? term (sign term)*

    sign: PLUS | MINUS

    term: INT                        -> constant
        | (INT "*"?)? VAR ("^" INT)? -> monomial

    PLUS: "+"
    MINUS: "-"
    VAR: "x"

    %import common.INT
    %import common.WS
    %ignore WS
"""


def _ints(f: typing.Iterable[typing.Any]) -> typing.Tuple[int, ...]:
    return tuple(int(c) for c in f)


@dataclasses.dataclass(frozen=True)
class ZxPoly:
    """A polynomial with integer coefficients.

    Attributes:
        coeffs: The coefficients, highest degree first, no leading zero. The zero polynomial is ``()``.
    """

    coeffs: typing.Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[0] == 0:
            raise DomainError(context_msg="leading coefficient of a ZxPoly must be non-zero")

    @classmethod
    def from_ints(cls, coeffs: typing.Iterable[int]) -> "ZxPoly":
        """Builds a polynomial from coefficients highest degree first, leading zeros are dropped."""
        values = list(coeffs)
        while values and values[0] == 0:
            values.pop(0)

        return cls(tuple(int(c) for c in values))

    @classmethod
    def pure(cls, n: int, m: int) -> "ZxPoly":
        """The polynomial ``x^n - m``."""
        return cls((1,) + (0,) * (n - 1) + (-m,))

    @property
    def degree(self) -> int:
        """The degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] == 1

    def content_valuation(self, p: int) -> Valuation:
        """The smallest p-adic valuation among the coefficients, the valuation of the polynomial itself."""
        valuations = [vp(p, c) for c in self.coeffs if c]
        return min(valuations) if valuations else INFINITY

    def __add__(self, other: "ZxPoly") -> "ZxPoly":
        return ZxPoly(_ints(dup_add(list(self.coeffs), list(other.coeffs), ZZ)))

    def __sub__(self, other: "ZxPoly") -> "ZxPoly":
        return ZxPoly(_ints(dup_sub(list(self.coeffs), list(other.coeffs), ZZ)))

    def __mul__(self, other: "ZxPoly") -> "ZxPoly":
        return ZxPoly(_ints(dup_mul(list(self.coeffs), list(other.coeffs), ZZ)))

    def __str__(self) -> str:
        return format_poly(self.coeffs)


@dataclasses.dataclass(frozen=True)
class PhiExpansion:
    """The expansion ``F = sum(a_i * phi^i)`` with ``deg(a_i) < deg(phi)``.

    Attributes:
        phi: The monic base polynomial.
        terms: The digits ``a_0 .. a_l``, ``a_l`` is non-zero.
    """

    phi: ZxPoly
    terms: typing.Tuple[ZxPoly, ...]

    def __post_init__(self) -> None:
        if not self.terms or self.terms[-1].is_zero:
            raise DomainError(context_msg="the last digit of a phi-expansion must be non-zero")

        for term in self.terms:
            if term.degree >= self.phi.degree:
                raise DomainError(context_msg="digit %s is not reduced modulo %s" % (term, self.phi))

    @property
    def length(self) -> int:
        """The largest index l with a non-zero digit."""
        return len(self.terms) - 1

    def reconstruct(self) -> ZxPoly:
        """Evaluates the expansion back into a single polynomial with Horner's scheme."""
        result: typing.List[int] = []
        phi = list(self.phi.coeffs)
        for term in reversed(self.terms):
            result = dup_add(dup_mul(result, phi, ZZ), list(term.coeffs), ZZ)

        return ZxPoly(_ints(result))


class _PolyTransformer(lark.Transformer):
    def sign(self, children: typing.List[lark.Token]) -> int:
        return -1 if children[0] == "-" else 1

    def constant(self, children: typing.List[lark.Token]) -> typing.Tuple[int, int]:
        return int(children[0]), 0

    def monomial(self, children: typing.List[lark.Token]) -> typing.Tuple[int, int]:
        coeff = 1
        exponent = 1
        seen_var = False
        for child in children:
            if child.type == "VAR":
                seen_var = True
            elif seen_var:
                exponent = int(child)
            else:
                coeff = int(child)

        return coeff, exponent

    def poly(self, children: typing.List[typing.Any]) -> typing.Dict[int, int]:
        terms: typing.Dict[int, int] = collections.defaultdict(int)
        sign = 1
        for child in children:
            if isinstance(child, int):
                sign = child
                continue

            coeff, exponent = child
            terms[exponent] += sign * coeff
            sign = 1

        return terms


_PARSER = lark.Lark(_GRAMMAR, start="poly", parser="lalr", transformer=_PolyTransformer())


def parse_poly(text: str) -> ZxPoly:
    """Parses a polynomial in ``x`` such as ``x^30 - 7`` or ``2x^2 + 3*x + 1``.

    Repeated exponents are summed. Errors carry the 0 based character offset of the offending input.

    Args:
        text: The polynomial expression.

    Returns:
        ZxPoly: The parsed polynomial.
    """
    try:
        terms = _PARSER.parse(text)
    except UnexpectedInput as e:
        offset = getattr(e, "pos_in_stream", None)
        if offset is None or offset < 0:
            offset = len(text)

        raise PolynomialSyntaxError(context_msg="cannot parse '%s'" % text, offset=offset) from e

    degree = max(terms) if terms else 0
    if degree > MAX_PARSE_DEGREE:
        raise OutOfRangeError(context_msg="degree %d exceeds the parser limit %d" % (degree, MAX_PARSE_DEGREE))

    dense = [0] * (degree + 1)
    for exponent, coeff in terms.items():
        dense[degree - exponent] += coeff

    return ZxPoly.from_ints(dense)


def reduce_mod_p(f: ZxPoly, p: int) -> FpPoly:
    return FpPoly.from_ints(p, f.coeffs)


def lift(f: FpPoly) -> ZxPoly:
    """The canonical lift of f, coefficients in ``0..p-1``."""
    return ZxPoly(f.coeffs)


def phi_expand(f: ZxPoly, phi: ZxPoly) -> PhiExpansion:
    """Computes the phi-adic digits of f by repeated Euclidean division by phi.

    Args:
        f: The non-zero polynomial to expand.
        phi: The monic base, degree at least 1.

    Returns:
        PhiExpansion: The digits ``a_0 .. a_l``.
    """
    if phi.degree < 1 or not phi.is_monic:
        raise DomainError(context_msg="phi-expansion needs a monic phi of degree >= 1, got %s" % phi)

    if f.is_zero:
        raise DomainError(context_msg="cannot expand the zero polynomial")

    terms = []
    quotient = list(f.coeffs)
    divisor = list(phi.coeffs)
    while quotient:
        quotient, remainder = dup_div(quotient, divisor, ZZ)
        terms.append(ZxPoly(_ints(remainder)))

    return PhiExpansion(phi=phi, terms=tuple(terms))


def phi_remainder(f: ZxPoly, phi: ZxPoly) -> ZxPoly:
    """The digit a_0 of the phi-expansion of f, without computing the other digits."""
    if phi.degree < 1 or not phi.is_monic:
        raise DomainError(context_msg="phi must be monic of degree >= 1, got %s" % phi)

    return ZxPoly(_ints(dup_rem(list(f.coeffs), list(phi.coeffs), ZZ)))


def sylvester_matrix(f: ZxPoly, g: ZxPoly) -> typing.List[typing.List[int]]:
    """The Sylvester matrix of f and g, ``deg(g)`` shifted rows of f followed by ``deg(f)`` shifted rows of g."""
    n, m = f.degree, g.degree
    size = n + m
    rows = []
    for shift in range(m):
        rows.append([0] * shift + list(f.coeffs) + [0] * (size - n - 1 - shift))

    for shift in range(n):
        rows.append([0] * shift + list(g.coeffs) + [0] * (size - m - 1 - shift))

    return rows


def resultant(f: ZxPoly, g: ZxPoly) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix, computed fraction free over ZZ."""
    rows = sylvester_matrix(f, g)
    size = len(rows)
    matrix = DomainMatrix([[ZZ(c) for c in row] for row in rows], (size, size), ZZ)
    return int(matrix.det())


def discriminant(f: ZxPoly) -> int:
    """The discriminant ``(-1)^(n(n-1)/2) * Res(f, f')`` of a monic polynomial of degree n >= 2."""
    if f.degree < 2 or not f.is_monic:
        raise DomainError(context_msg="discriminant needs a monic polynomial of degree >= 2, got %s" % f)

    n = f.degree
    derivative = ZxPoly(_ints(dup_diff(list(f.coeffs), 1, ZZ)))
    log.debug("Computing discriminant of a degree %d polynomial", n)

    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative)
