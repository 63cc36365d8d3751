# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""Polynomials over F_p and over F_q = F_p[x]/(phi).

Arithmetic over F_p is delegated to the dense kernels of :mod:`sympy.polys.galoistools` (coefficients highest degree
first). Polynomials over F_q use the same dense layout where every coefficient is itself a galoistools polynomial of
degree below ``deg(phi)``. Factorization follows the classic pipeline: square-free decomposition, distinct-degree
splitting and a randomized equal-degree splitting driven by a ``random.Random`` instance seeded per call.
"""

import dataclasses
import logging
import random
import typing

from sympy.ntheory import primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_ddf_zassenhaus,
    gf_degree,
    gf_diff,
    gf_div,
    gf_from_int_poly,
    gf_gcd,
    gf_gcdex,
    gf_irreducible_p,
    gf_monic,
    gf_mul,
    gf_mul_ground,
    gf_pow_mod,
    gf_quo,
    gf_rem,
    gf_sqf_list,
    gf_sub,
    gf_sub_ground,
)

from montes_lite._config import get_seed
from montes_lite._text import format_nested_poly, format_poly
from montes_lite.exceptions import DomainError, PreconditionError

log = logging.getLogger(__name__)

_GF = typing.List[int]
_FqDense = typing.List[_GF]


def _ints(f: typing.Iterable[typing.Any]) -> typing.Tuple[int, ...]:
    # galoistools hands back ZZ dtype values, mpz when gmpy2 is present.
    return tuple(int(c) for c in f)


@dataclasses.dataclass(frozen=True)
class FpPoly:
    """A polynomial over the prime field F_p.

    Attributes:
        p: The characteristic.
        coeffs: The residues in ``0..p-1``, highest degree first, no leading zero. The zero polynomial is ``()``.
    """

    p: int
    coeffs: typing.Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[0] == 0:
            raise DomainError(context_msg="leading coefficient of an FpPoly must be non-zero")

        if any(not 0 <= c < self.p for c in self.coeffs):
            raise DomainError(context_msg="coefficients %s are not reduced mod %d" % (self.coeffs, self.p))

    @classmethod
    def from_ints(
        cls,
        p: int,
        coeffs: typing.Iterable[int],
    ) -> "FpPoly":
        """Reduces arbitrary integer coefficients, highest degree first, modulo p."""
        return cls(p, _ints(gf_from_int_poly(list(coeffs), p)))

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

    def sort_key(self) -> typing.Tuple[int, typing.Tuple[int, ...]]:
        return self.degree, self.coeffs

    def monic(self) -> "FpPoly":
        if self.is_zero:
            return self

        return FpPoly(self.p, _ints(gf_monic(list(self.coeffs), self.p, ZZ)[1]))

    def derivative(self) -> "FpPoly":
        return FpPoly(self.p, _ints(gf_diff(list(self.coeffs), self.p, ZZ)))

    def _check(self, other: "FpPoly") -> None:
        if self.p != other.p:
            raise DomainError(context_msg="cannot mix polynomials over F_%d and F_%d" % (self.p, other.p))

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, _ints(gf_add(list(self.coeffs), list(other.coeffs), self.p, ZZ)))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, _ints(gf_sub(list(self.coeffs), list(other.coeffs), self.p, ZZ)))

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, _ints(gf_mul(list(self.coeffs), list(other.coeffs), self.p, ZZ)))

    def __pow__(self, exponent: int) -> "FpPoly":
        result = FpPoly(self.p, (1,))
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other: "FpPoly") -> typing.Tuple["FpPoly", "FpPoly"]:
        self._check(other)
        if other.is_zero:
            raise DomainError(context_msg="division by the zero polynomial")

        q, r = gf_div(list(self.coeffs), list(other.coeffs), self.p, ZZ)
        return FpPoly(self.p, _ints(q)), FpPoly(self.p, _ints(r))

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def __str__(self) -> str:
        return format_poly(self.coeffs)


@dataclasses.dataclass(frozen=True)
class FqField:
    """The finite field F_p[x]/(modulus).

    Attributes:
        p: The characteristic.
        modulus: Monic irreducible FpPoly defining the extension.
    """

    p: int
    modulus: FpPoly

    def __post_init__(self) -> None:
        if self.modulus.p != self.p:
            raise DomainError(context_msg="modulus is not a polynomial over F_%d" % self.p)

        if not self.modulus.is_monic or self.modulus.degree < 1:
            raise PreconditionError(context_msg="field modulus %s must be monic of degree >= 1" % self.modulus)

        if not gf_irreducible_p(list(self.modulus.coeffs), self.p, ZZ):
            raise PreconditionError(context_msg="field modulus %s is reducible mod %d" % (self.modulus, self.p))

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def order(self) -> int:
        return self.p**self.degree

    def element(self, value: typing.Union[FpPoly, typing.Sequence[int]]) -> FpPoly:
        """Returns the reduced representative of an element."""
        coeffs = list(value.coeffs) if isinstance(value, FpPoly) else list(gf_from_int_poly(list(value), self.p))
        return FpPoly(self.p, _ints(gf_rem(coeffs, list(self.modulus.coeffs), self.p, ZZ)))

    # Element arithmetic on raw galoistools lists, used by the dense algorithms below.

    def _mul(self, a: _GF, b: _GF) -> _GF:
        return gf_rem(gf_mul(a, b, self.p, ZZ), list(self.modulus.coeffs), self.p, ZZ)

    def _inv(self, a: _GF) -> _GF:
        if not a:
            raise DomainError(context_msg="zero has no inverse in %s" % self)

        s, _, _ = gf_gcdex(a, list(self.modulus.coeffs), self.p, ZZ)
        return s

    def _pow(self, a: _GF, exponent: int) -> _GF:
        return gf_pow_mod(a, exponent, list(self.modulus.coeffs), self.p, ZZ)

    def _random(self, rng: random.Random) -> _GF:
        return gf_from_int_poly([rng.randrange(self.p) for _ in range(self.degree)], self.p)

    def __str__(self) -> str:
        return "F_%d[x]/(%s)" % (self.p, self.modulus)


@dataclasses.dataclass(frozen=True)
class FqPoly:
    """A polynomial over an FqField.

    Attributes:
        field: The coefficient field.
        coeffs: The coefficients, highest degree first, each a reduced FpPoly. No leading zero element.
    """

    field: FqField
    coeffs: typing.Tuple[FpPoly, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[0].is_zero:
            raise DomainError(context_msg="leading coefficient of an FqPoly must be non-zero")

        for c in self.coeffs:
            if c.p != self.field.p or c.degree >= self.field.degree:
                raise DomainError(context_msg="coefficient %s is not reduced in %s" % (c, self.field))

    @classmethod
    def from_elements(
        cls,
        field: FqField,
        coeffs: typing.Iterable[typing.Union[FpPoly, typing.Sequence[int]]],
    ) -> "FqPoly":
        """Builds a polynomial from unreduced elements, highest degree first."""
        return cls._from_dense(field, [list(field.element(c).coeffs) for c in coeffs])

    @classmethod
    def _from_dense(
        cls,
        field: FqField,
        f: _FqDense,
    ) -> "FqPoly":
        f = _fq_strip(f)
        return cls(field, tuple(FpPoly(field.p, _ints(c)) for c in f))

    def _dense(self) -> _FqDense:
        return [list(c.coeffs) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0].coeffs == (1,)

    def sort_key(self) -> typing.Tuple[int, typing.Tuple[typing.Tuple[int, ...], ...]]:
        width = self.field.degree
        return self.degree, tuple((0,) * (width - len(c.coeffs)) + c.coeffs for c in self.coeffs)

    def monic(self) -> "FqPoly":
        if self.is_zero:
            return self

        return FqPoly._from_dense(self.field, _fq_monic(self.field, self._dense()))

    def derivative(self) -> "FqPoly":
        return FqPoly._from_dense(self.field, _fq_diff(self.field, self._dense()))

    def _check(self, other: "FqPoly") -> None:
        if self.field != other.field:
            raise DomainError(context_msg="cannot mix polynomials over %s and %s" % (self.field, other.field))

    def __add__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly._from_dense(self.field, _fq_add(self.field, self._dense(), other._dense()))

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly._from_dense(self.field, _fq_sub(self.field, self._dense(), other._dense()))

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly._from_dense(self.field, _fq_mul(self.field, self._dense(), other._dense()))

    def __pow__(self, exponent: int) -> "FqPoly":
        result = FqPoly(self.field, (FpPoly(self.field.p, (1,)),))
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other: "FqPoly") -> typing.Tuple["FqPoly", "FqPoly"]:
        self._check(other)
        q, r = _fq_div(self.field, self._dense(), other._dense())
        return FqPoly._from_dense(self.field, q), FqPoly._from_dense(self.field, r)

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[1]

    def __str__(self) -> str:
        return format_nested_poly([str(c) for c in self.coeffs])


class FactorTerm(typing.NamedTuple):
    """An irreducible monic factor and its multiplicity."""

    #: The monic irreducible factor.
    factor: typing.Union[FpPoly, FqPoly]
    #: How often the factor divides the input.
    multiplicity: int


def is_irreducible(f: typing.Union[FpPoly, FqPoly]) -> bool:
    """Whether f is irreducible over its coefficient field.

    Over F_p this is the Rabin test from galoistools, over F_q the same iterated Frobenius test runs on the dense
    F_q algorithms in this module.
    """
    if f.is_zero:
        raise DomainError(context_msg="irreducibility of the zero polynomial is undefined")

    if isinstance(f, FpPoly):
        return f.degree >= 1 and bool(gf_irreducible_p(list(f.coeffs), f.p, ZZ))

    return _fq_irreducible_p(f.field, _fq_monic(f.field, f._dense()))


@typing.overload
def gcd(f: FpPoly, g: FpPoly) -> FpPoly: ...  # pragma: nocover


@typing.overload
def gcd(f: FqPoly, g: FqPoly) -> FqPoly: ...  # pragma: nocover


def gcd(f: typing.Any, g: typing.Any) -> typing.Any:
    """The monic greatest common divisor of f and g."""
    if f.is_zero and g.is_zero:
        raise DomainError(context_msg="gcd(0, 0) is undefined")

    if isinstance(f, FpPoly):
        f._check(g)
        return FpPoly(f.p, _ints(gf_gcd(list(f.coeffs), list(g.coeffs), f.p, ZZ)))

    f._check(g)
    return FqPoly._from_dense(f.field, _fq_gcd(f.field, f._dense(), g._dense()))


@typing.overload
def factor(f: FpPoly) -> typing.List[FactorTerm]: ...  # pragma: nocover


@typing.overload
def factor(f: FqPoly) -> typing.List[FactorTerm]: ...  # pragma: nocover


def factor(f: typing.Any) -> typing.Any:
    """Factors f into monic irreducible factors.

    The leading unit is dropped. Factors are returned in canonical order: ascending degree, then the coefficient
    sequence compared lexicographically from the leading coefficient down.

    Args:
        f: The polynomial over F_p or F_q, degree at least 1.

    Returns:
        List[FactorTerm]: The factors with their multiplicities.
    """
    if f.degree < 1:
        raise DomainError(context_msg="cannot factor the constant polynomial %s" % f)

    rng = random.Random(get_seed())
    if isinstance(f, FpPoly):
        terms = [FactorTerm(FpPoly(f.p, _ints(g)), k) for g, k in _gf_factor(list(f.coeffs), f.p, rng)]
    else:
        terms = [FactorTerm(FqPoly._from_dense(f.field, g), k) for g, k in _fq_factor(f.field, f._dense(), rng)]

    terms.sort(key=lambda t: t.factor.sort_key())
    log.debug("Factored %s into %d irreducible factors", f, len(terms))
    return terms


def _gf_factor(
    f: _GF,
    p: int,
    rng: random.Random,
) -> typing.List[typing.Tuple[_GF, int]]:
    _, f = gf_monic(f, p, ZZ)
    if gf_degree(f) == 1:
        return [(f, 1)]

    result = []
    for g, k in gf_sqf_list(f, p, ZZ)[1]:
        for h, d in gf_ddf_zassenhaus(g, p, ZZ):
            for irreducible in _gf_edf(h, d, p, rng):
                result.append((irreducible, k))

    return result


def _gf_edf(
    f: _GF,
    n: int,
    p: int,
    rng: random.Random,
) -> typing.List[_GF]:
    # Same shape as gf_edf_zassenhaus but with a caller owned random source instead of the module global one.
    factors = [f]
    if gf_degree(f) <= n:
        return factors

    count = gf_degree(f) // n
    while len(factors) < count:
        r = [1] + [rng.randrange(p) for _ in range(2 * n - 1)]

        if p == 2:
            h = r
            power = r
            for _ in range(n - 1):
                power = gf_pow_mod(power, 2, f, p, ZZ)
                h = gf_add(h, power, p, ZZ)

            g = gf_gcd(f, h, p, ZZ)
        else:
            h = gf_pow_mod(r, (p**n - 1) // 2, f, p, ZZ)
            g = gf_gcd(f, gf_sub_ground(h, 1, p, ZZ), p, ZZ)

        if g != [1] and g != f:
            factors = _gf_edf(g, n, p, rng) + _gf_edf(gf_quo(f, g, p, ZZ), n, p, rng)

    return factors


def _fq_strip(f: _FqDense) -> _FqDense:
    idx = 0
    while idx < len(f) and not f[idx]:
        idx += 1
    return f[idx:]


def _fq_degree(f: _FqDense) -> int:
    return len(f) - 1


def _fq_one() -> _FqDense:
    return [[1]]


def _fq_x() -> _FqDense:
    return [[1], []]


def _fq_add(field: FqField, f: _FqDense, g: _FqDense) -> _FqDense:
    if len(f) < len(g):
        f, g = g, f

    offset = len(f) - len(g)
    result = f[:offset] + [gf_add(a, b, field.p, ZZ) for a, b in zip(f[offset:], g)]
    return _fq_strip(result)


def _fq_neg(field: FqField, f: _FqDense) -> _FqDense:
    return [gf_sub([], a, field.p, ZZ) for a in f]


def _fq_sub(field: FqField, f: _FqDense, g: _FqDense) -> _FqDense:
    return _fq_add(field, f, _fq_neg(field, g))


def _fq_mul(field: FqField, f: _FqDense, g: _FqDense) -> _FqDense:
    if not f or not g:
        return []

    result: _FqDense = [[] for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if not a:
            continue

        for j, b in enumerate(g):
            if b:
                result[i + j] = gf_add(result[i + j], gf_mul(a, b, field.p, ZZ), field.p, ZZ)

    modulus = list(field.modulus.coeffs)
    return _fq_strip([gf_rem(c, modulus, field.p, ZZ) for c in result])


def _fq_scale(field: FqField, f: _FqDense, a: _GF) -> _FqDense:
    return _fq_strip([field._mul(c, a) for c in f])


def _fq_div(field: FqField, f: _FqDense, g: _FqDense) -> typing.Tuple[_FqDense, _FqDense]:
    if not g:
        raise DomainError(context_msg="division by the zero polynomial")

    remainder = list(f)
    dg = _fq_degree(g)
    if _fq_degree(remainder) < dg:
        return [], remainder

    lc_inv = field._inv(g[0])
    quotient: _FqDense = [[] for _ in range(_fq_degree(remainder) - dg + 1)]

    while remainder and _fq_degree(remainder) >= dg:
        shift = _fq_degree(remainder) - dg
        coeff = field._mul(remainder[0], lc_inv)
        quotient[len(quotient) - 1 - shift] = coeff

        step = _fq_scale(field, g, coeff) + [[] for _ in range(shift)]
        remainder = _fq_sub(field, remainder, step)

    return _fq_strip(quotient), remainder


def _fq_rem(field: FqField, f: _FqDense, g: _FqDense) -> _FqDense:
    return _fq_div(field, f, g)[1]


def _fq_quo(field: FqField, f: _FqDense, g: _FqDense) -> _FqDense:
    return _fq_div(field, f, g)[0]


def _fq_monic(field: FqField, f: _FqDense) -> _FqDense:
    if not f:
        return f

    return _fq_scale(field, f, field._inv(f[0]))


def _fq_gcd(field: FqField, f: _FqDense, g: _FqDense) -> _FqDense:
    while g:
        f, g = g, _fq_rem(field, f, g)

    return _fq_monic(field, f)


def _fq_diff(field: FqField, f: _FqDense) -> _FqDense:
    degree = _fq_degree(f)
    result = [gf_mul_ground(c, (degree - idx) % field.p, field.p, ZZ) for idx, c in enumerate(f[:-1])]
    return _fq_strip(result)


def _fq_pow_mod(field: FqField, f: _FqDense, n: int, g: _FqDense) -> _FqDense:
    result = _fq_one()
    base = _fq_rem(field, f, g)

    while n:
        if n & 1:
            result = _fq_rem(field, _fq_mul(field, result, base), g)

        n >>= 1
        if n:
            base = _fq_rem(field, _fq_mul(field, base, base), g)

    return _fq_rem(field, result, g)


def _fq_pth_root(field: FqField, f: _FqDense) -> _FqDense:
    # f(y) = sum a_i y^(p*i), the root is sum a_i^(q/p) y^i.
    p = field.p
    exponent = field.order // p
    degree = _fq_degree(f) // p
    return [field._pow(f[i * p], exponent) if f[i * p] else [] for i in range(degree + 1)]


def _fq_sqf_list(field: FqField, f: _FqDense) -> typing.List[typing.Tuple[_FqDense, int]]:
    n, sqf, factors = 1, False, []

    while True:
        derivative = _fq_diff(field, f)
        if derivative:
            g = _fq_gcd(field, f, derivative)
            h = _fq_quo(field, f, g)
            i = 1

            while h != _fq_one():
                common = _fq_gcd(field, g, h)
                part = _fq_quo(field, h, common)

                if _fq_degree(part) > 0:
                    factors.append((part, i * n))

                g, h, i = _fq_quo(field, g, common), common, i + 1

            if g == _fq_one():
                sqf = True
            else:
                f = g

        if not sqf:
            f, n = _fq_pth_root(field, f), n * field.p
        else:
            break

    return factors


def _fq_frobenius_power(field: FqField, h: _FqDense, times: int, f: _FqDense) -> _FqDense:
    for _ in range(times):
        h = _fq_pow_mod(field, h, field.order, f)
    return h


def _fq_ddf(field: FqField, f: _FqDense) -> typing.List[typing.Tuple[_FqDense, int]]:
    i, h, factors = 1, _fq_x(), []

    while 2 * i <= _fq_degree(f):
        h = _fq_pow_mod(field, h, field.order, f)
        g = _fq_gcd(field, f, _fq_sub(field, h, _fq_x()))

        if g != _fq_one():
            factors.append((g, i))
            f = _fq_quo(field, f, g)
            h = _fq_rem(field, h, f)

        i += 1

    if _fq_degree(f) > 0:
        factors.append((f, _fq_degree(f)))

    return factors


def _fq_edf(
    field: FqField,
    f: _FqDense,
    n: int,
    rng: random.Random,
) -> typing.List[_FqDense]:
    factors = [f]
    if _fq_degree(f) <= n:
        return factors

    count = _fq_degree(f) // n
    while len(factors) < count:
        # A monic linear r can take one trace value at every root of f, y^2 + y + 1 over F_4 is such a case.
        r = _fq_strip([field._random(rng) for _ in range(2 * n)])
        if _fq_degree(r) < 1:
            continue

        if field.p == 2:
            # Absolute trace of F_(q^n) down to F_2, it is 0 or 1 on every irreducible component of f.
            h = _fq_rem(field, r, f)
            power = h
            for _ in range(field.degree * n - 1):
                power = _fq_rem(field, _fq_mul(field, power, power), f)
                h = _fq_add(field, h, power)

            g = _fq_gcd(field, f, h)
        else:
            h = _fq_pow_mod(field, r, (field.order**n - 1) // 2, f)
            g = _fq_gcd(field, f, _fq_sub(field, h, _fq_one()))

        if g != _fq_one() and g != f:
            factors = _fq_edf(field, g, n, rng) + _fq_edf(field, _fq_quo(field, f, g), n, rng)

    return factors


def _fq_factor(
    field: FqField,
    f: _FqDense,
    rng: random.Random,
) -> typing.List[typing.Tuple[_FqDense, int]]:
    f = _fq_monic(field, f)
    if _fq_degree(f) == 1:
        return [(f, 1)]

    result = []
    for g, k in _fq_sqf_list(field, f):
        for h, d in _fq_ddf(field, g):
            for irreducible in _fq_edf(field, h, d, rng):
                result.append((irreducible, k))

    return result


def _fq_irreducible_p(field: FqField, f: _FqDense) -> bool:
    n = _fq_degree(f)
    if n < 1:
        return False
    elif n == 1:
        return True

    x = _fq_x()
    for r in primefactors(n):
        h = _fq_frobenius_power(field, x, n // r, f)
        if _fq_gcd(field, f, _fq_sub(field, h, x)) != _fq_one():
            return False

    return _fq_frobenius_power(field, x, n, f) == x


__all__ = [
    "FactorTerm",
    "FpPoly",
    "FqField",
    "FqPoly",
    "factor",
    "gcd",
    "is_irreducible",
]
