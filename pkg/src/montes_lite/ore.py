# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""Ore's first order analysis of a monic integer polynomial at a prime.

F is factored modulo p, every repeated factor phi_i gets its principal phi_i-Newton polygon and the residual
polynomials of the sides are factored over ``F_p[x]/(phi_i)``. The result is a lower bound for the p-adic valuation
of the index ``(Z_K : Z[alpha])`` together with the prime ideals above p that the first order data already pins down.

F is assumed irreducible over the rationals, this is not re-verified here.
"""

import dataclasses
import functools
import logging
import typing

from montes_lite._text import format_slope
from montes_lite.arith import monic_irreducible_count, vp
from montes_lite.exceptions import DomainError
from montes_lite.ffpoly import FactorTerm, FqField, factor
from montes_lite.polygon import (
    NewtonPolygon,
    ResidualPolynomial,
    Side,
    build_polygon,
    phi_index,
    principal_part,
    residual_polynomial,
)
from montes_lite.zxpoly import ZxPoly, discriminant, lift, phi_expand, phi_remainder, reduce_mod_p

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class FactorSite:
    """An irreducible factor of F modulo p.

    Attributes:
        phi: The canonical lift of the factor, coefficients in ``0..p-1``.
        multiplicity: The exponent l_i of the factor in F modulo p.
        residue_field: ``F_p[x]/(phi)``.
    """

    phi: ZxPoly
    multiplicity: int
    residue_field: FqField


@dataclasses.dataclass(frozen=True)
class SideAnalysis:
    side: Side
    residual: ResidualPolynomial
    residual_factors: typing.Tuple[FactorTerm, ...]


@dataclasses.dataclass(frozen=True)
class IdealDatum:
    """A prime ideal above p read off the first order data.

    Attributes:
        ramification: The ramification index e, the denominator of the side slope.
        residue_degree: ``deg(phi_i) * deg(psi_ijs)``.
        provenance: ``(site, side, factor)`` indices into the report, ``side`` and ``factor`` are 0 for sites with
            multiplicity 1.
        guaranteed: The residual factor is simple, so the ideal exists with exactly this e and f.
    """

    ramification: int
    residue_degree: int
    provenance: typing.Tuple[int, int, int]
    guaranteed: bool


class IndexWitness(typing.NamedTuple):
    """More prime ideals of residue degree f above p than monic irreducible polynomials of degree f."""

    #: The prime.
    p: int
    #: The residue degree.
    f: int
    #: The certified lower bound for the number of prime ideals of residue degree f.
    P_f_bound: int
    #: The number of monic irreducible polynomials of degree f over F_p.
    N_f: int


class DiscriminantValuations(typing.NamedTuple):
    #: v_p of the polynomial discriminant.
    polynomial: int
    #: v_p of the field discriminant, only known when the report is regular.
    field: typing.Optional[int]


@dataclasses.dataclass(frozen=True)
class OreReport:
    """The outcome of :func:`analyze_prime`.

    Attributes:
        p: The prime.
        degree: The degree of F.
        sites: The irreducible factors of F modulo p in canonical order.
        polygons: The principal polygon of each site, None for sites of multiplicity 1.
        analyses: The side analyses of each site.
        site_indices: ``ind_phi_i(F)`` of each site.
        index_lower_bound: The sum of the site indices, a lower bound for ``v_p((Z_K : Z[alpha]))``.
        regular: Every residual factor is simple, the bound above is then exact.
        ideals: The prime ideals read off the sites and sides.
    """

    p: int
    degree: int
    sites: typing.Tuple[FactorSite, ...]
    polygons: typing.Tuple[typing.Optional[NewtonPolygon], ...]
    analyses: typing.Tuple[typing.Tuple[SideAnalysis, ...], ...]
    site_indices: typing.Tuple[int, ...]
    index_lower_bound: int
    regular: bool
    ideals: typing.Tuple[IdealDatum, ...]

    def decomposition(self) -> typing.Optional[str]:
        """Renders ``p*Z_K`` as a product of prime ideals, only available for regular reports."""
        if not self.regular:
            return None

        parts = []
        for idx, ideal in enumerate(self.ideals, start=1):
            power = "^%d" % ideal.ramification if ideal.ramification > 1 else ""
            parts.append("P%d%s[f=%d]" % (idx, power, ideal.residue_degree))

        return "%d*Z_K = %s" % (self.p, " * ".join(parts))

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        sites = []
        for site, analyses, ind in zip(self.sites, self.analyses, self.site_indices):
            sides = []
            for analysis in analyses:
                side = analysis.side
                sides.append(
                    {
                        "slope": format_slope(side.slope),
                        "length": side.length,
                        "height": side.height,
                        "degree": side.degree,
                        "residual": str(analysis.residual.poly),
                        "factors": [{"psi": str(t.factor), "a": t.multiplicity} for t in analysis.residual_factors],
                    }
                )

            sites.append({"phi": str(site.phi), "l": site.multiplicity, "sides": sides, "ind": ind})

        return {
            "p": self.p,
            "sites": sites,
            "index_lower_bound": self.index_lower_bound,
            "regular": self.regular,
            "ideals": [{"e": i.ramification, "f": i.residue_degree, "guaranteed": i.guaranteed} for i in self.ideals],
        }


def _check_poly(f: ZxPoly) -> None:
    if f.degree < 1:
        raise DomainError(context_msg="Ore analysis needs a polynomial of degree >= 1, got %s" % f)

    if not f.is_monic:
        raise DomainError(context_msg="Ore analysis needs a monic polynomial, got %s" % f)


@functools.lru_cache(maxsize=256)
def factor_sites(f: ZxPoly, p: int) -> typing.Tuple[FactorSite, ...]:
    """The irreducible factors of f modulo p as lifted sites, in canonical factor order."""
    _check_poly(f)

    sites = []
    for term in factor(reduce_mod_p(f, p)):
        sites.append(FactorSite(lift(term.factor), term.multiplicity, FqField(p, term.factor)))

    log.debug("F of degree %d has %d irreducible factors modulo %d", f.degree, len(sites), p)
    return tuple(sites)


def analyze_prime(f: ZxPoly, p: int) -> OreReport:
    """Runs the first order analysis of f at p.

    Args:
        f: Monic polynomial of degree at least 1, irreducible over the rationals.
        p: The prime.

    Returns:
        OreReport: The per site polygons, residual factorizations, index bound and prime ideal data.
    """
    sites = factor_sites(f, p)
    log.debug("Analyzing F of degree %d at p=%d", f.degree, p)

    polygons: typing.List[typing.Optional[NewtonPolygon]] = []
    analyses: typing.List[typing.Tuple[SideAnalysis, ...]] = []
    indices = []
    ideals = []
    regular = True

    for i, site in enumerate(sites):
        deg_phi = site.phi.degree
        if site.multiplicity == 1:
            polygons.append(None)
            analyses.append(())
            indices.append(0)
            ideals.append(IdealDatum(1, deg_phi, (i, 0, 0), True))
            continue

        exp = phi_expand(f, site.phi)
        polygon = principal_part(build_polygon(exp, p))

        site_analyses = []
        for j, side in enumerate(polygon.sides):
            residual = residual_polynomial(side, exp, p)
            terms = tuple(factor(residual.poly))
            site_analyses.append(SideAnalysis(side, residual, terms))

            for s, term in enumerate(terms):
                simple = term.multiplicity == 1
                regular = regular and simple
                ideals.append(IdealDatum(side.slope_den, deg_phi * term.factor.degree, (i, j, s), simple))

        polygons.append(polygon)
        analyses.append(tuple(site_analyses))
        indices.append(phi_index(polygon, deg_phi))

    report = OreReport(
        p=p,
        degree=f.degree,
        sites=sites,
        polygons=tuple(polygons),
        analyses=tuple(analyses),
        site_indices=tuple(indices),
        index_lower_bound=sum(indices),
        regular=regular,
        ideals=tuple(ideals),
    )
    log.debug("p=%d regular=%s index bound %d", p, report.regular, report.index_lower_bound)
    return report


def is_p_maximal(f: ZxPoly, p: int) -> bool:
    """Whether p does not divide the index of ``Z[alpha]``.

    A site contributes nothing when its multiplicity is 1 or when its polygon is a single side of height 1, which is
    the case exactly when ``v_p(a_0) = 1``. Only the other sites need their polygon.
    """
    for site in factor_sites(f, p):
        if site.multiplicity == 1:
            continue

        if phi_remainder(f, site.phi).content_valuation(p) == 1:
            continue

        polygon = principal_part(build_polygon(phi_expand(f, site.phi), p))
        if phi_index(polygon, site.phi.degree) > 0:
            log.debug("Site %s of multiplicity %d makes Z[alpha] non %d-maximal", site.phi, site.multiplicity, p)
            return False

    return True


def ideal_count_lower_bound(report: OreReport, f: int) -> int:
    """The number of guaranteed prime ideals of residue degree f, a lower bound for P_f."""
    return sum(1 for ideal in report.ideals if ideal.guaranteed and ideal.residue_degree == f)


def index_divisor_witnesses(report: OreReport) -> typing.List[IndexWitness]:
    """Every residue degree f where the certified ideal count exceeds N_f, each one proves p divides i(K)."""
    witnesses = []
    for f in sorted({i.residue_degree for i in report.ideals if i.guaranteed}):
        bound = ideal_count_lower_bound(report, f)
        count = monic_irreducible_count(report.p, f)
        if bound > count:
            witnesses.append(IndexWitness(report.p, f, bound, count))

    return witnesses


def discriminant_valuations(f: ZxPoly, report: OreReport) -> DiscriminantValuations:
    """v_p of the discriminant of f and, for regular reports, of the field discriminant.

    This builds the full Sylvester determinant so keep it to moderate degrees.
    """
    polynomial = int(vp(report.p, discriminant(f)))
    field = polynomial - 2 * report.index_lower_bound if report.regular else None
    return DiscriminantValuations(polynomial, field)
