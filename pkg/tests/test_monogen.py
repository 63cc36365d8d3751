# -*- coding: utf-8 -*-
# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

import logging
import re

import pytest

import montes_lite.monogen as monogen
from montes_lite._config import Variant
from montes_lite.arith import FactoredInteger
from montes_lite.exceptions import DomainError, InvalidFieldSpecError, PreconditionError
from montes_lite.ore import factor_sites
from montes_lite.polygon import build_polygon, principal_part
from montes_lite.zxpoly import ZxPoly, phi_expand

from .conftest import conformance_cases, poly, squarefree_range


def _rule_ids(hits):
    return [h.rule_id for h in hits]


def _engine_witness(verdict, rule_id, p):
    for hit in verdict.witnesses:
        if hit.rule_id == rule_id and hit.p == p and hit.source == monogen.WitnessSource.polygon_engine:
            return hit

    return None


def test_field_spec():
    spec = monogen.FieldSpec(1, 1, 1, -10)

    assert spec.exponents == (1, 1, 1)
    assert spec.n == 30
    assert spec.polynomial == ZxPoly.pure(30, -10)
    assert str(spec.polynomial) == "x^30 + 10"
    assert spec.primes_of_m == (2, 5)
    assert spec.factorization.value == -10
    assert spec.exponent(2) == 1
    assert spec.exponent(5) == 1


def test_field_spec_degree():
    assert monogen.FieldSpec(2, 1, 3, 2).n == 4 * 3 * 125
    assert monogen.FieldSpec(2, 1, 3, 2).exponent(5) == 3


def test_field_spec_given_factorization(mocker):
    factor = mocker.patch("montes_lite.monogen.factor_integer")
    fi = FactoredInteger(-1, ((3, 1), (7, 1)))

    spec = monogen.FieldSpec(1, 1, 1, -21, factorization=fi)

    assert spec.primes_of_m == (3, 7)
    assert factor.call_count == 0
    assert spec.m == -21


@pytest.mark.parametrize(
    "u, v, t, m, expected",
    [
        (0, 1, 1, 2, "u, v, t must be positive, got (0, 1, 1)"),
        (1, 1, -1, 2, "u, v, t must be positive, got (1, 1, -1)"),
        (1, 1, 1, 0, "m must not be 0 or ±1, got 0"),
        (1, 1, 1, 1, "m must not be 0 or ±1, got 1"),
        (1, 1, 1, -1, "m must not be 0 or ±1, got -1"),
        (1, 1, 1, 12, "m=12 is not square-free, divisible by the square of 2"),
        (1, 1, 1, -900, "m=-900 is not square-free, divisible by the square of 2, 3, 5"),
    ],
)
def test_field_spec_invalid(u, v, t, m, expected):
    with pytest.raises(InvalidFieldSpecError, match=re.escape(expected)):
        monogen.FieldSpec(u, v, t, m)


def test_field_spec_factorization_mismatch():
    fi = FactoredInteger(1, ((2, 1), (5, 1)))

    with pytest.raises(InvalidFieldSpecError, match=re.escape("factorization does not multiply to m=6")):
        monogen.FieldSpec(1, 1, 1, 6, factorization=fi)


@pytest.mark.parametrize(
    "m, expected",
    [
        (2, True),
        (-2, True),
        (3, True),
        (5, False),
        (-7, False),
        (10, False),
        (17, False),
        (26, False),
        (7, False),
        (43, False),
        (-3, False),
        (11, True),
    ],
)
def test_classify_maximality(m, expected):
    assert monogen.classify_maximality(monogen.FieldSpec(1, 1, 1, m)) == expected


def test_maximality_routes_agree_degree_30():
    mismatches = []
    for m in squarefree_range(2, 300):
        spec = monogen.FieldSpec(1, 1, 1, m)
        if monogen.classify_maximality(spec) != monogen.engine_maximality(spec):
            mismatches.append(m)

    assert mismatches == []


@pytest.mark.parametrize("exponents", [(2, 1, 1), (1, 2, 1), (1, 1, 2)])
def test_maximality_routes_agree_sampled(exponents, rng):
    candidates = squarefree_range(2, 300)
    mismatches = []
    for m in rng.sample(candidates, 20):
        spec = monogen.FieldSpec(*exponents, m)
        if monogen.classify_maximality(spec) != monogen.engine_maximality(spec):
            mismatches.append(m)

    assert mismatches == []


@pytest.mark.parametrize(
    "exponents, m, variant, expected",
    [
        ((1, 1, 1), 2, Variant.proof, []),
        ((1, 1, 1), 5, Variant.proof, ["R1"]),
        ((1, 1, 1), 10, Variant.proof, ["R2"]),
        ((2, 1, 1), 17, Variant.proof, ["R1", "R3"]),
        ((2, 1, 1), 26, Variant.proof, ["R3", "R6"]),
        ((2, 1, 1), -26, Variant.proof, ["R2", "R7"]),
        ((1, 3, 1), -82, Variant.proof, ["R4"]),
        ((1, 3, 1), 26, Variant.proof, []),
        ((1, 3, 1), 26, Variant.theorem, ["R4"]),
        ((4, 1, 1), 26, Variant.proof, ["R6"]),
        ((4, 1, 1), 26, Variant.theorem, []),
        ((1, 1, 2), 251, Variant.proof, ["R5"]),
        ((1, 1, 3), 707, Variant.proof, ["R8"]),
        ((1, 1, 2), 707, Variant.proof, []),
        ((1, 1, 1), -7, Variant.proof, ["R1"]),
        ((1, 1, 2), -249, Variant.proof, ["R5"]),
    ],
)
def test_rule_table(exponents, m, variant, expected):
    actual = monogen.rule_table(monogen.FieldSpec(*exponents, m), variant)

    assert _rule_ids(actual) == expected
    assert all(h.source == monogen.WitnessSource.congruence_rule for h in actual)
    assert all(h.P_f_bound == 0 for h in actual)


def test_rule_table_counts():
    actual = monogen.rule_table(monogen.FieldSpec(2, 1, 1, 26))

    assert [(h.p, h.f, h.N_f) for h in actual] == [(3, 2, 3), (5, 1, 5)]


def test_classify_maximal(caplog):
    with caplog.at_level(logging.DEBUG, logger="montes_lite.monogen"):
        actual = monogen.classify(monogen.FieldSpec(1, 1, 1, 2))

    assert actual == monogen.Verdict(monogen.VerdictKind.maximal_monogenic, (), True, Variant.proof)
    assert actual.to_dict() == {"kind": "MaximalMonogenic", "rules": [], "maximal": True, "variant": "proof"}
    assert "Confirmed Z[alpha] is 2-maximal for m=2" in caplog.text


def test_classify_minus_seven():
    actual = monogen.classify(monogen.FieldSpec(1, 1, 1, -7))

    assert actual.kind == monogen.VerdictKind.non_monogenic
    assert not actual.maximal
    assert actual.witnesses[0] == monogen.RuleHit("R1", 2, 2, 2, 1, monogen.WitnessSource.polygon_engine)
    assert actual.witnesses[0].to_dict() == {
        "id": "R1",
        "p": 2,
        "f": 2,
        "P_f_bound": 2,
        "N_f": 1,
        "source": "polygon-engine",
    }


@pytest.mark.parametrize(
    "rule_id, p, exponents, values",
    [
        ("R1", 2, (1, 1, 1), [5, -7, 13, 17, -3]),
        ("R2", 3, (1, 1, 1), [10, 19, 37, -17]),
        ("R3", 3, (2, 1, 1), [17, -19, 35]),
        ("R4", 3, (1, 3, 1), [-82, 161, -163]),
        ("R5", 5, (1, 1, 2), [251, 249, -249, -251, 374]),
        ("R6", 5, (2, 1, 1), [26, 51, -74, 101]),
        ("R7", 5, (2, 1, 1), [-26, 74, -51, 149]),
    ],
)
def test_rules_engine_confirmed(rule_id, p, exponents, values):
    for m in values:
        verdict = monogen.classify(monogen.FieldSpec(*exponents, m))

        assert verdict.kind == monogen.VerdictKind.non_monogenic, m
        hit = _engine_witness(verdict, rule_id, p)
        assert hit is not None, m
        assert hit.P_f_bound > hit.N_f, m


@pytest.mark.parametrize("m", [182, -182, 807])
def test_engine_only_witness(m):
    verdict = monogen.classify(monogen.FieldSpec(1, 1, 3, m))

    assert verdict.kind == monogen.VerdictKind.non_monogenic
    hit = _engine_witness(verdict, monogen.ENGINE_RULE_ID, 5)
    assert hit is not None
    assert hit.P_f_bound > hit.N_f


def test_congruence_only_witness():
    verdict = monogen.classify(monogen.FieldSpec(1, 1, 3, 707))

    assert verdict.kind == monogen.VerdictKind.non_monogenic
    hits = [h for h in verdict.witnesses if h.rule_id == "R8"]
    assert len(hits) == 1
    assert hits[0].source == monogen.WitnessSource.congruence_rule
    assert hits[0].p == 5
    assert hits[0].f == 2
    assert hits[0].N_f == 10


def test_classify_variant_is_reported():
    actual = monogen.classify(monogen.FieldSpec(1, 1, 1, 2), Variant.theorem)

    assert actual.variant == Variant.theorem
    assert actual.to_dict()["variant"] == "theorem"


def test_classify_undecided(mocker):
    mocker.patch("montes_lite.monogen.rule_table", return_value=[])
    mocker.patch("montes_lite.monogen.index_divisor_witnesses", return_value=[])

    actual = monogen.classify(monogen.FieldSpec(1, 1, 1, -7))

    assert actual.kind == monogen.VerdictKind.undecided
    assert actual.witnesses == ()
    assert not actual.maximal


def test_expected_polygon_first_branch():
    spec = monogen.FieldSpec(1, 1, 1, 2)
    phi = poly("x^2 + 1")

    actual = monogen.expected_pure_polygon(3, spec, phi)

    assert actual == monogen.PolygonPrediction(((0, 1), (3, 0)), None)

    observed = principal_part(build_polygon(phi_expand(spec.polynomial, phi), 3))
    assert observed.vertices == ((0, 1), (3, 0))
    assert monogen.prediction_consistent(actual, observed)


def test_expected_polygon_second_branch():
    actual = monogen.expected_pure_polygon(5, monogen.FieldSpec(1, 1, 1, 7), poly("x^2 + 2"))

    assert actual == monogen.PolygonPrediction(((1, 1), (5, 0)), 2)


def test_expected_polygon_second_branch_consistent():
    spec = monogen.FieldSpec(1, 1, 1, -7)
    phi = poly("x^2 + x + 1")

    actual = monogen.expected_pure_polygon(2, spec, phi)
    observed = principal_part(build_polygon(phi_expand(spec.polynomial, phi), 2))

    assert actual == monogen.PolygonPrediction(((1, 1), (2, 0)), 2)
    assert observed.vertices == ((0, 3), (1, 1), (2, 0))
    assert monogen.prediction_consistent(actual, observed)


def test_prediction_inconsistent():
    spec = monogen.FieldSpec(1, 1, 1, -7)
    observed = principal_part(build_polygon(phi_expand(spec.polynomial, poly("x^2 + x + 1")), 2))

    assert not monogen.prediction_consistent(monogen.PolygonPrediction(((0, 1), (2, 0)), None), observed)
    assert not monogen.prediction_consistent(monogen.PolygonPrediction(((1, 1), (2, 0)), 4), observed)


@pytest.mark.parametrize(
    "p, m, phi, expected",
    [
        (7, 2, "x + 1", "polygon shape prediction is only available for 2, 3 and 5, got 7"),
        (2, 10, "x + 1", "p=2 divides m=10"),
    ],
)
def test_expected_polygon_domain(p, m, phi, expected):
    with pytest.raises(DomainError, match=re.escape(expected)):
        monogen.expected_pure_polygon(p, monogen.FieldSpec(1, 1, 1, m), poly(phi))


@pytest.mark.parametrize("phi", ["x^2 + x + 1", "x + 1", "2x + 1"])
def test_expected_polygon_precondition(phi):
    with pytest.raises(PreconditionError, match=re.escape("is not an irreducible factor of x^10 - 2 modulo 3")):
        monogen.expected_pure_polygon(3, monogen.FieldSpec(1, 1, 1, 2), poly(phi))


def test_expected_polygon_conformance(rng):
    phi = poly("x - 1")
    mismatches = []
    for p, spec in conformance_cases(rng, 50):
        prediction = monogen.expected_pure_polygon(p, spec, phi)
        observed = principal_part(build_polygon(phi_expand(spec.polynomial, phi), p))

        assert prediction.leftmost_bound is None
        if observed.vertices != prediction.vertices:
            mismatches.append((p, spec.exponents, spec.m))

        assert monogen.prediction_consistent(prediction, observed)

    assert mismatches == []


def test_expected_polygon_every_site():
    # Every canonical site of x^30 - 2 at 3 is a factor of x^10 - 2 and lands in the first branch.
    spec = monogen.FieldSpec(1, 1, 1, 2)
    for site in factor_sites(spec.polynomial, 3):
        prediction = monogen.expected_pure_polygon(3, spec, site.phi)

        assert prediction == monogen.PolygonPrediction(((0, 1), (3, 0)), None)


@pytest.mark.parametrize(
    "a, s, expected",
    [
        (2, 7, (13, 3)),
        (2, 1, (1, 0)),
        (-7, 11, (11, 4)),
        (5, 29, (29, 28)),
    ],
)
def test_reduce_exponent(a, s, expected):
    spec, certificate = monogen.reduce_exponent(a, s, 1, 1, 1)

    assert spec == monogen.FieldSpec(1, 1, 1, a)
    assert certificate == expected
    assert s * certificate[0] - spec.n * certificate[1] == 1
    assert 0 < certificate[0] < spec.n


@pytest.mark.parametrize("s", [0, 6, 9, 25, 30, 31])
def test_reduce_exponent_invalid(s):
    with pytest.raises(PreconditionError, match=re.escape("s=%d must be coprime to 30 and lie in 1..29" % s)):
        monogen.reduce_exponent(2, s, 1, 1, 1)


def test_reduce_exponent_invalid_base():
    with pytest.raises(InvalidFieldSpecError):
        monogen.reduce_exponent(4, 7, 1, 1, 1)


def test_classify_power():
    verdict, certificate = monogen.classify_power(2, 7, 1, 1, 1)

    assert verdict.kind == monogen.VerdictKind.maximal_monogenic
    assert certificate == (13, 3)


def test_classify_power_inherits_rule():
    verdict, certificate = monogen.classify_power(5, 11, 1, 1, 1)

    assert verdict.kind == monogen.VerdictKind.non_monogenic
    assert "R1" in _rule_ids(verdict.witnesses)
    assert certificate == (11, 4)


def test_classify_maximality_uses_canonical_residues(mocker):
    spy = mocker.spy(monogen, "canonical_residue")

    assert monogen.classify_maximality(monogen.FieldSpec(1, 1, 1, -2))
    assert spy.call_args_list == [mocker.call(-2, 4), mocker.call(-2, 9), mocker.call(-2, 25)]
    assert spy.spy_return == 23


def test_rule_table_uses_canonical_residues(mocker):
    spy = mocker.spy(monogen, "canonical_residue")

    monogen.rule_table(monogen.FieldSpec(1, 1, 1, -7))

    assert spy.call_count > 0
    assert all(c.args[0] == -7 for c in spy.call_args_list)
    assert {c.args[1] for c in spy.call_args_list} >= {4, 9, 25}
