# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""Brute force cross-checks for the engine.

Everything here is written from first principles on plain integer lists and does not call into the engine modules,
only :class:`~montes_lite.ffpoly.FpPoly` is used as the exchange type. Speed is not a concern, the enumeration
functions refuse to work past a fixed budget.
"""

import dataclasses
import fractions
import functools
import itertools
import logging
import math
import typing

import sympy

from montes_lite.exceptions import OutOfRangeError
from montes_lite.ffpoly import FpPoly

log = logging.getLogger(__name__)

#: Largest number of candidate polynomials ``p^f`` the enumeration will touch.
ENUMERATION_BUDGET = 10**5

_Coeffs = typing.Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class OracleReport:
    """The outcome of comparing an engine operation with its oracle.

    Attributes:
        subject: Name of the checked operation.
        agreed: Whether every case agreed.
        counterexample: The repr of the first disagreeing input.
        checked: How many cases were compared.
    """

    subject: str
    agreed: bool
    counterexample: typing.Optional[str] = None
    checked: int = 0

    def __post_init__(self) -> None:
        if not self.agreed and self.counterexample is None:
            raise ValueError("a disagreeing OracleReport needs a counterexample")


def _trim(a: typing.Sequence[int]) -> _Coeffs:
    idx = 0
    while idx < len(a) and a[idx] == 0:
        idx += 1
    return tuple(a[idx:])


def _mul(a: _Coeffs, b: _Coeffs, p: int) -> _Coeffs:
    if not a or not b:
        return ()

    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _divmod_monic(a: _Coeffs, b: _Coeffs, p: int) -> typing.Tuple[_Coeffs, _Coeffs]:
    # Schoolbook long division, b is monic.
    rem = list(a)
    if len(rem) < len(b):
        return (), _trim(rem)

    quo = []
    for i in range(len(rem) - len(b) + 1):
        c = rem[i] % p
        quo.append(c)
        if c:
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - c * y) % p

    return _trim(quo), _trim(rem[len(rem) - len(b) + 1 :])


def _check_budget(p: int, f: int) -> None:
    if p**f > ENUMERATION_BUDGET:
        raise OutOfRangeError(
            context_msg="enumerating degree %d over F_%d needs %d candidates, budget is %d"
            % (f, p, p**f, ENUMERATION_BUDGET)
        )


def _monics(p: int, f: int) -> typing.Iterator[_Coeffs]:
    for tail in itertools.product(range(p), repeat=f):
        yield (1,) + tail


@functools.lru_cache(maxsize=None)
def _irreducibles(p: int, f: int) -> typing.Tuple[_Coeffs, ...]:
    _check_budget(p, f)

    # Every reducible monic of degree f is an irreducible of degree k <= f/2 times some monic of degree f - k.
    reducible: typing.Set[_Coeffs] = set()
    for k in range(1, f // 2 + 1):
        for g in _irreducibles(p, k):
            for h in _monics(p, f - k):
                reducible.add(_mul(g, h, p))

    return tuple(c for c in _monics(p, f) if c not in reducible)


def enumerate_monic_irreducibles(p: int, f: int) -> typing.List[FpPoly]:
    """All monic irreducible polynomials of degree f over F_p in canonical order.

    Args:
        p: The prime.
        f: The degree, at least 1.

    Returns:
        List[FpPoly]: The irreducibles, coefficient sequences ascending.
    """
    if f < 1:
        raise OutOfRangeError(context_msg="degree must be at least 1, got %d" % f)

    return [FpPoly(p, c) for c in _irreducibles(p, f)]


def factor_by_trial(f: FpPoly) -> typing.List[typing.Tuple[FpPoly, int]]:
    """Factors f by dividing out every monic irreducible of increasing degree.

    Once the remaining cofactor has no factor of degree at most half its own it is irreducible.

    Args:
        f: The polynomial, degree at least 1.

    Returns:
        List[Tuple[FpPoly, int]]: The monic factors with multiplicities in canonical order.
    """
    p = f.p
    if f.degree < 1:
        raise OutOfRangeError(context_msg="cannot factor a constant")

    inv = pow(f.coeffs[0], p - 2, p) if p > 2 else 1
    rest = tuple((c * inv) % p for c in f.coeffs)

    result = []
    k = 1
    while len(rest) - 1 >= 2 * k:
        for g in _irreducibles(p, k):
            count = 0
            while True:
                quo, rem = _divmod_monic(rest, g, p)
                if rem:
                    break
                rest = quo
                count += 1

            if count:
                result.append((FpPoly(p, g), count))
        k += 1

    if len(rest) > 1:
        result.append((FpPoly(p, rest), 1))

    result.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return result


def lattice_count_naive(vertices: typing.Sequence[typing.Tuple[int, int]]) -> int:
    """Counts the points ``(i, y)`` with ``i, y >= 1`` on or below a polygon given by its vertices."""
    if len(vertices) < 2:
        return 0

    width = max(x for x, _ in vertices)
    height = max(y for _, y in vertices)
    segments = list(zip(vertices, vertices[1:]))

    count = 0
    for i in range(1, width + 1):
        for y in range(1, height + 1):
            for (x0, y0), (x1, y1) in segments:
                if x0 <= i <= x1:
                    if y <= y0 + fractions.Fraction(y1 - y0, x1 - x0) * (i - x0):
                        count += 1
                    break

    return count


def binomial_valuation_direct(p: int, r: int, j: int) -> int:
    """v_p of ``C(p^r, j)`` from the full binomial coefficient."""
    value = math.comb(p**r, j)
    if value == 0:
        raise OutOfRangeError(context_msg="C(%d^%d, %d) is zero" % (p, r, j))

    count = 0
    while value % p == 0:
        value //= p
        count += 1
    return count


def discriminant_direct(coeffs: typing.Sequence[int]) -> int:
    """The discriminant of the integer polynomial with the given coefficients, highest degree first."""
    x = sympy.Symbol("x")
    return int(sympy.Poly(list(coeffs), x).discriminant())


def is_squarefree_naive(n: int) -> bool:
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def check_agreement(
    subject: str,
    cases: typing.Iterable[typing.Any],
    engine: typing.Callable[[typing.Any], typing.Any],
    oracle: typing.Callable[[typing.Any], typing.Any],
) -> OracleReport:
    """Runs engine and oracle on every case and stops at the first disagreement."""
    checked = 0
    for case in cases:
        checked += 1
        expected = oracle(case)
        actual = engine(case)
        if actual != expected:
            log.debug("%s disagrees on %r: engine %r, oracle %r", subject, case, actual, expected)
            return OracleReport(subject, False, repr(case), checked)

    return OracleReport(subject, True, None, checked)
