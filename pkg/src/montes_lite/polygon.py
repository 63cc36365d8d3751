# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""phi-Newton polygons of a phi-expansion with respect to a prime.

The polygon is the lower convex envelope of the points ``(i, v_p(a_i))`` for the non-zero digits ``a_i``. Slopes are
kept as :class:`fractions.Fraction` so every lattice count is exact.
"""

import dataclasses
import fractions
import logging
import math
import typing

from montes_lite._text import format_slope
from montes_lite.arith import Valuation
from montes_lite.exceptions import DomainError, PreconditionError
from montes_lite.ffpoly import FpPoly, FqField, FqPoly, is_irreducible
from montes_lite.zxpoly import PhiExpansion, ZxPoly, reduce_mod_p

log = logging.getLogger(__name__)

Point = typing.Tuple[int, int]


class PolygonPoint(typing.NamedTuple):
    """A point ``(i, v_p(a_i))`` of the cloud the polygon is built from."""

    #: The index i of the digit in the phi-expansion.
    abscissa: int
    #: The p-adic valuation of the digit, never infinite as zero digits are skipped.
    ordinate: Valuation


@dataclasses.dataclass(frozen=True)
class Side:
    """A side of a Newton polygon between two lattice points.

    The slope is ``-h/e`` in lowest terms, ``d = gcd(l, H)`` is the degree so ``l = e*d`` and ``H = h*d``.

    Attributes:
        start: The left end point ``(s, u_s)``.
        end: The right end point.
    """

    start: Point
    end: Point

    def __post_init__(self) -> None:
        if self.end[0] <= self.start[0]:
            raise DomainError(context_msg="side %s -> %s must run left to right" % (self.start, self.end))

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def slope(self) -> fractions.Fraction:
        return fractions.Fraction(self.end[1] - self.start[1], self.length)

    @property
    def slope_num(self) -> int:
        """h, the negated numerator of the slope."""
        return -self.slope.numerator

    @property
    def slope_den(self) -> int:
        """e, the ramification index of the side."""
        return self.slope.denominator

    @property
    def degree(self) -> int:
        return math.gcd(self.length, abs(self.height))

    def ordinate_at(self, abscissa: int) -> fractions.Fraction:
        return self.start[1] + self.slope * (abscissa - self.start[0])

    def describe(self) -> str:
        return "%s -> %s slope=%s l=%d H=%d d=%d e=%d" % (
            self.start,
            self.end,
            format_slope(self.slope),
            self.length,
            self.height,
            self.degree,
            self.slope_den,
        )


@dataclasses.dataclass(frozen=True)
class NewtonPolygon:
    """A phi-Newton polygon.

    Attributes:
        p: The prime the valuations are taken at.
        phi: The base polynomial of the expansion.
        points: The point cloud the envelope was built from.
        sides: The sides, ordered by strictly increasing slope.
    """

    p: int
    phi: ZxPoly
    points: typing.Tuple[PolygonPoint, ...]
    sides: typing.Tuple[Side, ...]

    @property
    def vertices(self) -> typing.Tuple[Point, ...]:
        if not self.sides:
            return ()

        return (self.sides[0].start,) + tuple(s.end for s in self.sides)

    @property
    def length(self) -> int:
        return sum(s.length for s in self.sides)

    @property
    def is_empty(self) -> bool:
        return not self.sides


@dataclasses.dataclass(frozen=True)
class ResidualPolynomial:
    """The residual polynomial attached to a side of the principal part.

    Attributes:
        side: The side the polynomial belongs to.
        poly: The polynomial ``t_d y^d + ... + t_0`` over ``F_p[x]/(phi)``.
    """

    side: Side
    poly: FqPoly


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: typing.Iterable[Point]) -> typing.List[Point]:
    """The vertices of the lower convex envelope, left to right, collinear points dropped."""
    hull: typing.List[Point] = []
    for point in sorted(set(points)):
        if hull and hull[-1][0] == point[0]:
            # Same abscissa, the lower point sorted first and wins.
            continue

        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)

    return hull


def build_polygon(exp: PhiExpansion, p: int) -> NewtonPolygon:
    """Builds the phi-Newton polygon of an expansion.

    Args:
        exp: The phi-expansion of F.
        p: The prime.

    Returns:
        NewtonPolygon: The polygon with all its sides.
    """
    phi_bar = reduce_mod_p(exp.phi, p)
    if phi_bar.degree < 1 or not is_irreducible(phi_bar):
        raise PreconditionError(context_msg="%s is not irreducible modulo %d" % (exp.phi, p))

    points = tuple(
        PolygonPoint(i, term.content_valuation(p)) for i, term in enumerate(exp.terms) if not term.is_zero
    )
    vertices = lower_hull((pt.abscissa, int(pt.ordinate)) for pt in points)
    sides = tuple(Side(a, b) for a, b in zip(vertices, vertices[1:]))
    log.debug("phi=%s p=%d polygon vertices %s", exp.phi, p, vertices)

    return NewtonPolygon(p=p, phi=exp.phi, points=points, sides=sides)


def principal_part(poly: NewtonPolygon) -> NewtonPolygon:
    """Keeps only the sides of negative slope."""
    return dataclasses.replace(poly, sides=tuple(s for s in poly.sides if s.slope < 0))


def residue_field(phi: ZxPoly, p: int) -> FqField:
    return FqField(p, reduce_mod_p(phi, p))


def residual_polynomial(side: Side, exp: PhiExpansion, p: int) -> ResidualPolynomial:
    """Computes the residual polynomial of a side of the principal part.

    The coefficient ``t_i`` is the class of ``a_(s+ie) / p^(u_s - ih)`` in ``F_p[x]/(phi)`` when that point lies on
    the side, and zero when it lies strictly above it.

    Args:
        side: A side of negative slope of the polygon of exp.
        exp: The phi-expansion the polygon was built from.
        p: The prime.

    Returns:
        ResidualPolynomial: The polynomial of degree ``d`` with non-zero end coefficients.
    """
    if side.slope >= 0:
        raise DomainError(context_msg="side %s -> %s is not part of the principal polygon" % (side.start, side.end))

    if exp.phi.degree < 1 or side.end[0] > exp.length:
        raise DomainError(context_msg="side %s -> %s does not belong to this expansion" % (side.start, side.end))

    field = residue_field(exp.phi, p)
    s, u_s = side.start
    e, h, d = side.slope_den, side.slope_num, side.degree

    coeffs: typing.List[FpPoly] = []
    for i in range(d + 1):
        digit = exp.terms[s + i * e]
        expected = u_s - i * h

        if digit.is_zero or digit.content_valuation(p) > expected:
            coeffs.append(FpPoly(p, ()))
            continue

        divisor = p**expected
        coeffs.append(field.element(FpPoly.from_ints(p, [c // divisor for c in digit.coeffs])))

    poly = FqPoly.from_elements(field, reversed(coeffs))
    if poly.degree != d or coeffs[0].is_zero:
        raise DomainError(
            context_msg="side %s -> %s does not lie on the polygon of the expansion" % (side.start, side.end)
        )

    return ResidualPolynomial(side=side, poly=poly)


def lattice_points(poly: NewtonPolygon) -> typing.List[Point]:
    """The points ``(i, y)`` with ``i, y >= 1`` on or below the polygon, column by column."""
    points = []
    for side in poly.sides:
        first = max(1, side.start[0] + (1 if side is not poly.sides[0] else 0))
        for i in range(first, side.end[0] + 1):
            bound = math.floor(side.ordinate_at(i))
            points.extend((i, y) for y in range(1, bound + 1))

    return points


def phi_index(poly: NewtonPolygon, deg_phi: int) -> int:
    """``ind_phi``: deg(phi) times the number of lattice points counted by :func:`lattice_points`."""
    return deg_phi * len(lattice_points(poly))
