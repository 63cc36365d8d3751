# -*- coding: utf-8 -*-
# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

import random
import typing

import pytest

from montes_lite._config import SEED_ENV_VAR
from montes_lite.arith import vp
from montes_lite.ffpoly import FpPoly
from montes_lite.monogen import FieldSpec
from montes_lite.zxpoly import ZxPoly, parse_poly


def poly(text: str) -> ZxPoly:
    return parse_poly(text)


def fp(p: int, text: str) -> FpPoly:
    return FpPoly.from_ints(p, parse_poly(text).coeffs)


def squarefree_range(low: int, high: int) -> typing.List[int]:
    """Every square-free m with ``low <= |m| <= high`` of either sign."""
    values = []
    for m in range(low, high + 1):
        if all(m % (d * d) for d in range(2, int(m**0.5) + 1)):
            values.extend([m, -m])

    return sorted(values)


def conformance_cases(
    rng: random.Random,
    count: int,
) -> typing.List[typing.Tuple[int, FieldSpec]]:
    """Random (p, field) pairs with m = 1 (mod p) so x - 1 divides x^t' - m modulo p."""
    cases = []
    while len(cases) < count:
        p = rng.choice([2, 3, 5])
        r = rng.choice([1, 2, 3])
        m = rng.randrange(-3000, 3000)
        if m % p != 1 or abs(m) < 2 or any(m % (d * d) == 0 for d in range(2, 60)):
            continue

        if vp(p, m ** (p - 1) - 1) > r:
            continue

        exponents = {2: (r, 1, 1), 3: (1, r, 1), 5: (1, 1, r)}[p]
        cases.append((p, FieldSpec(*exponents, m)))

    return cases


@pytest.fixture(autouse=True)
def fixed_seed(monkeypatch):
    monkeypatch.delenv(SEED_ENV_VAR, raising=False)


@pytest.fixture()
def rng() -> random.Random:
    return random.Random(0x30)
