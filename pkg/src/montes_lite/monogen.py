# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""Maximality and common index divisors of pure fields defined by ``x^(2^u*3^v*5^t) - m``.

Two independent routes are implemented. The congruence route reads the answer off m modulo 4, 9, 25 and the rule
table below. The engine route runs the Ore analysis of :mod:`montes_lite.ore` at 2, 3 and 5 and compares the certified
number of prime ideals of residue degree f with the number of monic irreducible polynomials of degree f.
"""

import dataclasses
import enum
import logging
import random
import typing

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy import igcdex

from montes_lite._config import Variant, get_seed
from montes_lite.arith import FactoredInteger, canonical_residue, factor_integer, monic_irreducible_count, vp
from montes_lite.exceptions import DomainError, InvalidFieldSpecError, PreconditionError
from montes_lite.ffpoly import is_irreducible
from montes_lite.ore import (
    IndexWitness,
    OreReport,
    analyze_prime,
    ideal_count_lower_bound,
    index_divisor_witnesses,
    is_p_maximal,
)
from montes_lite.polygon import NewtonPolygon, Point, lower_hull
from montes_lite.zxpoly import ZxPoly, reduce_mod_p

log = logging.getLogger(__name__)

#: The primes dividing every degree ``2^u * 3^v * 5^t``, the only candidates for a common index divisor.
SMALL_PRIMES = (2, 3, 5)

#: Rule id used for engine witnesses that no congruence rule predicted.
ENGINE_RULE_ID = "ENGINE"

#: m modulo 25 in {±1, ±7}, exactly where v_5(m^4 - 1) >= 2.
_RESIDUES_25 = (1, 7, 18, 24)


class VerdictKind(str, enum.Enum):
    maximal_monogenic = "MaximalMonogenic"
    non_monogenic = "NonMonogenic"
    undecided = "NotMaximalUndecided"


class WitnessSource(str, enum.Enum):
    congruence_rule = "congruence-rule"
    polygon_engine = "polygon-engine"


@dataclasses.dataclass(frozen=True)
class FieldSpec:
    """The pure field defined by ``x^n - m`` with ``n = 2^u * 3^v * 5^t``.

    m must be square-free and not in {0, 1, -1}, which also makes ``x^n - m`` irreducible. Square-freeness is checked
    by factoring m, pass ``factorization`` when m is too large for the factoring budget.

    Attributes:
        u: Exponent of 2 in n.
        v: Exponent of 3 in n.
        t: Exponent of 5 in n.
        m: The radicand.
        factorization: The factorization of m, computed when not supplied.
    """

    u: int
    v: int
    t: int
    m: int
    factorization: typing.Optional[FactoredInteger] = dataclasses.field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if min(self.u, self.v, self.t) < 1:
            raise InvalidFieldSpecError(context_msg="u, v, t must be positive, got (%d, %d, %d)" % self.exponents)

        if self.m in (0, 1, -1):
            raise InvalidFieldSpecError(context_msg="m must not be 0 or ±1, got %d" % self.m)

        factorization = self.factorization
        if factorization is None:
            factorization = factor_integer(self.m)

        elif factorization.value != self.m:
            raise InvalidFieldSpecError(context_msg="factorization does not multiply to m=%d" % self.m)

        squares = [str(p) for p, e in factorization.prime_powers if e > 1]
        if squares:
            raise InvalidFieldSpecError(
                context_msg="m=%d is not square-free, divisible by the square of %s" % (self.m, ", ".join(squares))
            )

        object.__setattr__(self, "factorization", factorization)

    @property
    def exponents(self) -> typing.Tuple[int, int, int]:
        return self.u, self.v, self.t

    @property
    def n(self) -> int:
        return 2**self.u * 3**self.v * 5**self.t

    @property
    def polynomial(self) -> ZxPoly:
        return ZxPoly.pure(self.n, self.m)

    @property
    def primes_of_m(self) -> typing.Tuple[int, ...]:
        return self.factorization.primes if self.factorization else ()

    def exponent(self, p: int) -> int:
        """The exponent r of p in n."""
        return {2: self.u, 3: self.v, 5: self.t}[p]


@dataclasses.dataclass(frozen=True)
class RuleHit:
    """Evidence that p divides the common index i(K).

    Attributes:
        rule_id: R1 to R8 for congruence rules, ENGINE for a witness no rule predicted.
        p: The prime dividing i(K).
        f: The residue degree the ideal count was compared at.
        P_f_bound: Certified lower bound for the number of primes above p of residue degree f.
        N_f: The number of monic irreducible polynomials of degree f over F_p.
        source: Whether the polygon engine certified ``P_f_bound > N_f`` or only the congruence matched.
    """

    rule_id: str
    p: int
    f: int
    P_f_bound: int
    N_f: int
    source: WitnessSource

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "id": self.rule_id,
            "p": self.p,
            "f": self.f,
            "P_f_bound": self.P_f_bound,
            "N_f": self.N_f,
            "source": self.source.value,
        }


@dataclasses.dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witnesses: typing.Tuple[RuleHit, ...]
    maximal: bool
    variant: Variant

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "kind": self.kind.value,
            "rules": [w.to_dict() for w in self.witnesses],
            "maximal": self.maximal,
            "variant": self.variant.value,
        }


class _Rule(typing.NamedTuple):
    rule_id: str
    p: int
    f: int
    proof: typing.Callable[[FieldSpec], bool]
    theorem: typing.Callable[[FieldSpec], bool]


def _r1(s: FieldSpec) -> bool:
    return canonical_residue(s.m, 4) == 1


def _r2(s: FieldSpec) -> bool:
    return canonical_residue(s.m, 9) == 1


def _r3(s: FieldSpec) -> bool:
    return canonical_residue(s.m, 9) == 8 and s.u % 4 == 2


def _r4_proof(s: FieldSpec) -> bool:
    return s.u == 1 and canonical_residue(s.m, 81) in (1, 80) and s.v >= 3


def _r4_theorem(s: FieldSpec) -> bool:
    return s.u == 1 and canonical_residue(s.m, 27) == 26 and s.v >= 3


def _r5(s: FieldSpec) -> bool:
    return s.u == 1 and canonical_residue(s.m, 125) in (1, 124) and s.t >= 2


def _r6_proof(s: FieldSpec) -> bool:
    return canonical_residue(s.m, 25) == 1 and s.u >= 2


def _r6_theorem(s: FieldSpec) -> bool:
    return canonical_residue(s.m, 25) == 1 and s.u % 4 == 2


def _r7(s: FieldSpec) -> bool:
    return canonical_residue(s.m, 25) == 24 and s.u % 4 == 2


def _r8(s: FieldSpec) -> bool:
    return s.u == 1 and s.v == 1 and canonical_residue(s.m, 625) in (82, 543) and s.t >= 3


# u = 2k with k odd is u ≡ 2 (mod 4).
_RULES = (
    _Rule("R1", 2, 2, _r1, _r1),
    _Rule("R2", 3, 1, _r2, _r2),
    _Rule("R3", 3, 2, _r3, _r3),
    _Rule("R4", 3, 2, _r4_proof, _r4_theorem),
    _Rule("R5", 5, 1, _r5, _r5),
    _Rule("R6", 5, 1, _r6_proof, _r6_theorem),
    _Rule("R7", 5, 2, _r7, _r7),
    _Rule("R8", 5, 2, _r8, _r8),
)


def classify_maximality(spec: FieldSpec) -> bool:
    """Whether ``Z[alpha]`` is the ring of integers, read off the congruence class of m."""
    return (
        canonical_residue(spec.m, 4) != 1
        and canonical_residue(spec.m, 9) not in (1, 8)
        and canonical_residue(spec.m, 25) not in _RESIDUES_25
    )


def engine_maximality(spec: FieldSpec) -> bool:
    """The same question answered by the Ore engine at every prime that can divide the index."""
    f = spec.polynomial
    return all(is_p_maximal(f, p) for p in sorted(set(SMALL_PRIMES) | set(spec.primes_of_m)))


def rule_table(spec: FieldSpec, variant: Variant = Variant.proof) -> typing.List[RuleHit]:
    """The congruence rules matched by spec, each one predicts a prime common index divisor.

    The hits carry the nominal residue degree of the rule with ``P_f_bound`` 0, :func:`classify` fills in what the
    engine certifies.
    """
    hits = []
    for rule in _RULES:
        predicate = rule.theorem if variant == Variant.theorem else rule.proof
        if predicate(spec):
            hits.append(
                RuleHit(
                    rule_id=rule.rule_id,
                    p=rule.p,
                    f=rule.f,
                    P_f_bound=0,
                    N_f=monic_irreducible_count(rule.p, rule.f),
                    source=WitnessSource.congruence_rule,
                )
            )

    return hits


def _engine_hit(rule_id: str, witness: IndexWitness) -> RuleHit:
    return RuleHit(rule_id, witness.p, witness.f, witness.P_f_bound, witness.N_f, WitnessSource.polygon_engine)


def _confirm_prime_of_m(spec: FieldSpec) -> None:
    # x^n - m has a single side of height 1 at every p | m as m is square-free, spot check one of them.
    primes = spec.primes_of_m
    if not primes:
        return

    q = random.Random(get_seed()).choice(primes)
    if is_p_maximal(spec.polynomial, q):
        log.debug("Confirmed Z[alpha] is %d-maximal for m=%d", q, spec.m)
    else:
        log.warning("Z[alpha] is not %d-maximal for square-free m=%d, the engine disagrees with theory", q, spec.m)


def classify(spec: FieldSpec, variant: Variant = Variant.proof) -> Verdict:
    """Classifies the field of spec.

    Maximal ``Z[alpha]`` means the field is monogenic. Otherwise the congruence rules and the polygon engine look for
    a prime common index divisor, when neither finds one the verdict is undecided.

    Args:
        spec: The field.
        variant: Which reading of the congruence rules to apply.

    Returns:
        Verdict: The verdict with all witnesses found.
    """
    if classify_maximality(spec):
        if log.isEnabledFor(logging.DEBUG):
            _confirm_prime_of_m(spec)

        return Verdict(VerdictKind.maximal_monogenic, (), True, variant)

    f = spec.polynomial
    reports: typing.Dict[int, OreReport] = {}
    for p in SMALL_PRIMES:
        # A p-maximal order already shows p is not a common index divisor.
        if not is_p_maximal(f, p):
            reports[p] = analyze_prime(f, p)

    engine = {p: index_divisor_witnesses(report) for p, report in reports.items()}
    used: typing.Set[typing.Tuple[int, int]] = set()
    witnesses = []

    for hit in rule_table(spec, variant):
        candidates = engine.get(hit.p, [])
        chosen = next((w for w in candidates if w.f == hit.f), candidates[0] if candidates else None)

        if chosen:
            used.add((chosen.p, chosen.f))
            witnesses.append(_engine_hit(hit.rule_id, chosen))
            continue

        if hit.p not in reports:
            log.warning(
                "Rule %s predicts %d | i(K) for m=%d but Z[alpha] is %d-maximal", hit.rule_id, hit.p, spec.m, hit.p
            )
            bound = 0
        else:
            bound = ideal_count_lower_bound(reports[hit.p], hit.f)

        log.debug("Rule %s matched m=%d without an engine witness", hit.rule_id, spec.m)
        witnesses.append(dataclasses.replace(hit, P_f_bound=bound))

    for p, candidates in engine.items():
        for witness in candidates:
            if (witness.p, witness.f) not in used:
                witnesses.append(_engine_hit(ENGINE_RULE_ID, witness))

    kind = VerdictKind.non_monogenic if witnesses else VerdictKind.undecided
    log.debug("Classified (u=%d, v=%d, t=%d, m=%d) as %s", spec.u, spec.v, spec.t, spec.m, kind.value)
    return Verdict(kind, tuple(witnesses), False, variant)


class PolygonPrediction(typing.NamedTuple):
    """The predicted principal polygon of ``x^n - m`` at a factor of ``x^t' - m`` modulo p."""

    #: The predicted vertices, or the right hand part of them when the leftmost ordinate is only bounded.
    vertices: typing.Tuple[Point, ...]
    #: None when the vertices are exact, otherwise the lower bound of the ordinate at abscissa 0.
    leftmost_bound: typing.Optional[int]


def expected_pure_polygon(p: int, spec: FieldSpec, phi: ZxPoly) -> PolygonPrediction:
    """Predicts the principal phi-polygon of ``x^n - m`` at p from valuations of m alone.

    Write ``n = p^r * t'`` with p not dividing t'. When ``v_p(m^(p-1) - 1) <= r`` the polygon is the envelope of
    ``(0, v_p(m^p - m))`` and the points ``(p^j, r - j)``. Otherwise only the points ``(p^j, r - j)`` are
    predicted and the ordinate at 0 is at least ``r + 1``.

    Args:
        p: One of 2, 3, 5, not dividing m.
        spec: The field.
        phi: A monic lift of an irreducible factor of ``x^t' - m`` modulo p.

    Returns:
        PolygonPrediction: The predicted vertices and, in the second case, the bound on the leftmost ordinate.
    """
    if p not in SMALL_PRIMES:
        raise DomainError(context_msg="polygon shape prediction is only available for 2, 3 and 5, got %d" % p)

    if canonical_residue(spec.m, p) == 0:
        raise DomainError(context_msg="p=%d divides m=%d" % (p, spec.m))

    r = spec.exponent(p)
    cofactor = spec.n // p**r

    phi_bar = reduce_mod_p(phi, p)
    target = reduce_mod_p(ZxPoly.pure(cofactor, spec.m), p)
    if not phi.is_monic or not is_irreducible(phi_bar) or not (target % phi_bar).is_zero:
        raise PreconditionError(
            context_msg="%s is not an irreducible factor of x^%d - %d modulo %d" % (phi, cofactor, spec.m, p)
        )

    partial = [(p**j, r - j) for j in range(r + 1)]
    if vp(p, spec.m ** (p - 1) - 1) <= r:
        v = int(vp(p, spec.m**p - spec.m))
        return PolygonPrediction(tuple(lower_hull([(0, v)] + partial)), None)

    return PolygonPrediction(tuple(lower_hull(partial)), r + 1)


def prediction_consistent(prediction: PolygonPrediction, polygon: NewtonPolygon) -> bool:
    """Checks an observed principal polygon against a prediction."""
    observed = polygon.vertices
    if prediction.leftmost_bound is None:
        return observed == prediction.vertices

    if not observed or observed[0][0] != 0 or observed[0][1] < prediction.leftmost_bound:
        return False

    return tuple(lower_hull([observed[0]] + list(prediction.vertices))) == observed


def reduce_exponent(
    a: int,
    s: int,
    u: int,
    v: int,
    t: int,
    factorization: typing.Optional[FactoredInteger] = None,
) -> typing.Tuple[FieldSpec, typing.Tuple[int, int]]:
    """Reduces the field of ``x^n - a^s`` to the field of ``x^n - a``.

    With ``s*x - n*y = 1``, ``theta = alpha^x / a^y`` is a root of ``x^n - a`` generating the same field.

    Args:
        a: Square-free, not 0 or ±1.
        s: Positive, coprime to 30 and below n.
        u: Exponent of 2 in n.
        v: Exponent of 3 in n.
        t: Exponent of 5 in n.
        factorization: The factorization of a when it is too large to factor.

    Returns:
        Tuple[FieldSpec, Tuple[int, int]]: The field of ``x^n - a`` and the certificate ``(x, y)``, ``0 < x < n``.
    """
    spec = FieldSpec(u, v, t, a, factorization=factorization)
    n = spec.n
    if s < 1 or s >= n or s % 2 == 0 or s % 3 == 0 or s % 5 == 0:
        raise PreconditionError(context_msg="s=%d must be coprime to 30 and lie in 1..%d" % (s, n - 1))

    x, _, _ = igcdex(s, n)
    x = int(x) % n
    y = (s * x - 1) // n
    return spec, (x, y)


def classify_power(
    a: int,
    s: int,
    u: int,
    v: int,
    t: int,
    variant: Variant = Variant.proof,
    factorization: typing.Optional[FactoredInteger] = None,
) -> typing.Tuple[Verdict, typing.Tuple[int, int]]:
    """Classifies the field of ``x^n - a^s`` through :func:`reduce_exponent`."""
    spec, certificate = reduce_exponent(a, s, u, v, t, factorization=factorization)
    return classify(spec, variant), certificate
