#!/usr/bin/env python
# -*- coding: utf-8 -*-
# PYTHON_ARGCOMPLETE_OK

# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""
Command line front end for the Ore engine and the pure field classifier. Single fields are classified with
``classify``, ranges of m are swept with ``scan`` and the ``polygon``, ``factor`` and ``ore`` commands inspect the
intermediate data for any monic integer polynomial.
"""

import argparse
import collections
import concurrent.futures
import csv
import io
import json
import logging
import sys
import typing

from sympy import isprime

from montes_lite._config import Variant
from montes_lite._render import HAS_MATPLOTLIB, render_ascii, render_svg
from montes_lite._text import format_slope
from montes_lite.arith import FactoredInteger, factor_integer
from montes_lite.exceptions import FactoringBudgetExceeded, MontesError, PreconditionError
from montes_lite.ffpoly import factor, is_irreducible
from montes_lite.monogen import FieldSpec, Verdict, VerdictKind, WitnessSource, classify, reduce_exponent
from montes_lite.ore import analyze_prime, discriminant_valuations, factor_sites
from montes_lite.polygon import (
    NewtonPolygon,
    build_polygon,
    phi_index,
    principal_part,
    residual_polynomial,
)
from montes_lite.zxpoly import ZxPoly, parse_poly, phi_expand, reduce_mod_p

HAS_ARGCOMPLETE = False
try:
    import argcomplete

    HAS_ARGCOMPLETE = True
except ImportError:  # pragma: nocover
    pass


HAS_YAML = False
try:
    from ruamel import yaml

    HAS_YAML = True
except ImportError:  # pragma: nocover
    pass

log = logging.getLogger(__name__)

EXIT_CODES = {
    VerdictKind.maximal_monogenic: 0,
    VerdictKind.non_monogenic: 10,
    VerdictKind.undecided: 20,
}
EXIT_INPUT_ERROR = 2

MAX_EXPONENT = 6
MAX_ABS_M = 2**63
MAX_SCAN_RANGE = 10**6
MAX_FACTOR_PRIME = 10**4

CSV_HEADER = ["u", "v", "t", "m", "n", "maximal", "verdict", "rules", "witness_p", "witness_f", "Pf_bound", "Nf"]


def _emit(
    data: typing.Any,
    output_format: str,
    text: typing.Optional[str] = None,
) -> None:
    if output_format == "yaml" and HAS_YAML:
        y = yaml.YAML()
        y.default_flow_style = False
        y.dump(data, sys.stdout)
    elif output_format == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(data, indent=4))


def _verdict_text(
    spec: FieldSpec,
    verdict: Verdict,
    certificate: typing.Optional[typing.Tuple[int, int]],
    s: int,
) -> str:
    lines = ["%s (u=%d, v=%d, t=%d, m=%d, n=%d)" % (spec.polynomial, spec.u, spec.v, spec.t, spec.m, spec.n)]
    if certificate is not None and s != 1:
        lines.append(
            "x^%d - (%d)^%d defines the same field: theta = alpha^%d / (%d)^%d is a root of x^%d - (%d)"
            % (spec.n, spec.m, s, certificate[0], spec.m, certificate[1], spec.n, spec.m)
        )

    lines.append("verdict: %s (variant %s)" % (verdict.kind.value, verdict.variant.value))
    if verdict.kind == VerdictKind.maximal_monogenic:
        lines.append("Z[α] is the ring of integers, K is monogenic")
    elif verdict.kind == VerdictKind.non_monogenic:
        lines.append("Z[α] is not the ring of integers and K has a prime common index divisor")
    else:
        lines.append("Z[α] is not the ring of integers, no prime common index divisor was found")

    for hit in verdict.witnesses:
        if hit.source == WitnessSource.polygon_engine:
            lines.append(
                "  %s: %d | i(K), P_%d >= %d > %d = N_%d (%s)"
                % (hit.rule_id, hit.p, hit.f, hit.P_f_bound, hit.N_f, hit.f, hit.source.value)
            )
        else:
            lines.append("  %s: %d | i(K) (%s)" % (hit.rule_id, hit.p, hit.source.value))

    return "\n".join(lines)


def cmd_classify(args: argparse.Namespace) -> int:
    factorization = None
    if args.m_factored:
        factorization = FactoredInteger.from_string(args.m_factored, sign=-1 if args.m < 0 else 1)

    variant = Variant(args.variant)
    spec, certificate = reduce_exponent(args.m, args.s, args.u, args.v, args.t, factorization=factorization)
    verdict = classify(spec, variant)

    data = verdict.to_dict()
    if args.s != 1:
        data["certificate"] = {"x": certificate[0], "y": certificate[1]}

    _emit(data, args.output_format, text=_verdict_text(spec, verdict, certificate, args.s))
    return EXIT_CODES[verdict.kind]


def _scan_row(task: typing.Tuple[int, int, int, int, FactoredInteger, str]) -> typing.Dict[str, typing.Any]:
    u, v, t, m, factorization, variant = task
    spec = FieldSpec(u, v, t, m, factorization=factorization)
    verdict = classify(spec, Variant(variant))

    witness = next((w for w in verdict.witnesses if w.source == WitnessSource.polygon_engine), None)
    return {
        "u": u,
        "v": v,
        "t": t,
        "m": m,
        "n": spec.n,
        "maximal": verdict.maximal,
        "verdict": verdict.kind.value,
        "rules": [w.rule_id for w in verdict.witnesses],
        "witness_p": witness.p if witness else None,
        "witness_f": witness.f if witness else None,
        "Pf_bound": witness.P_f_bound if witness else None,
        "Nf": witness.N_f if witness else None,
    }


def _csv_cell(value: typing.Any) -> str:
    if value is None:
        return ""
    elif isinstance(value, bool):
        return "true" if value else "false"
    elif isinstance(value, list):
        return ";".join(value)
    else:
        return str(value)


def cmd_scan(args: argparse.Namespace) -> int:
    tasks = []
    skipped = 0
    for m in range(args.m_from, args.m_to + 1):
        if abs(m) < 2:
            skipped += 1
            continue

        # FieldSpec reuses this factorization instead of factoring m again.
        factorization = factor_integer(m)
        if not factorization.is_squarefree:
            skipped += 1
            continue

        tasks.append((args.u, args.v, args.t, m, factorization, args.variant))

    log.debug("Scanning %d fields with %d workers", len(tasks), args.workers)
    if args.workers > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.workers) as executor:
            rows = list(executor.map(_scan_row, tasks, chunksize=max(1, len(tasks) // (4 * args.workers))))
    else:
        rows = [_scan_row(task) for task in tasks]

    rows.sort(key=lambda r: (r["u"], r["v"], r["t"], r["m"]))

    if args.output_format == "json":
        content = json.dumps(rows, indent=4) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([_csv_cell(row[k]) for k in CSV_HEADER])
        content = buffer.getvalue()

    if args.out:
        try:
            with open(args.out, mode="w", encoding="utf-8", newline="") as fd:
                fd.write(content)
        except OSError as e:
            print("error: cannot write scan output to '%s': %s" % (args.out, e), file=sys.stderr)
            return EXIT_INPUT_ERROR
    else:
        sys.stdout.write(content)

    tally = collections.Counter(r["verdict"] for r in rows)
    print(
        "scanned %d fields, skipped %d non square-free: %s"
        % (len(rows), skipped, ", ".join("%s=%d" % (kind.value, tally[kind.value]) for kind in VerdictKind)),
        file=sys.stderr,
    )
    return 0


def _check_poly(poly: ZxPoly) -> None:
    if poly.degree < 1 or not poly.is_monic:
        raise PreconditionError(context_msg="expected a monic polynomial of degree >= 1, got %s" % poly)


def _site_data(poly: ZxPoly, phi: ZxPoly, p: int) -> typing.Tuple[NewtonPolygon, typing.Dict[str, typing.Any]]:
    exp = phi_expand(poly, phi)
    polygon = principal_part(build_polygon(exp, p))

    sides = []
    for side in polygon.sides:
        residual = residual_polynomial(side, exp, p)
        sides.append(
            {
                "start": list(side.start),
                "end": list(side.end),
                "slope": format_slope(side.slope),
                "length": side.length,
                "height": side.height,
                "degree": side.degree,
                "ramification": side.slope_den,
                "residual": str(residual.poly),
                "factors": [{"psi": str(t.factor), "a": t.multiplicity} for t in factor(residual.poly)],
            }
        )

    data = {
        "phi": str(phi),
        "vertices": [list(v) for v in polygon.vertices],
        "sides": sides,
        "ind": phi_index(polygon, phi.degree),
    }
    return polygon, data


def _site_text(polygon: NewtonPolygon, data: typing.Dict[str, typing.Any]) -> str:
    lines = [
        "phi = %s" % data["phi"],
        "vertices: %s" % (" ".join("(%d,%d)" % tuple(v) for v in data["vertices"]) or "none"),
    ]
    for side in data["sides"]:
        lines.append(
            "  side (%d,%d) -> (%d,%d) slope=%s l=%d H=%d d=%d e=%d"
            % (
                side["start"][0],
                side["start"][1],
                side["end"][0],
                side["end"][1],
                side["slope"],
                side["length"],
                side["height"],
                side["degree"],
                side["ramification"],
            )
        )
        lines.append("    residual: %s" % side["residual"])
        lines.append("    factors: %s" % ", ".join("(%s)^%d" % (f["psi"], f["a"]) for f in side["factors"]))

    lines.append("ind_phi = %d" % data["ind"])
    lines.append(render_ascii(polygon))
    return "\n".join(lines)


def cmd_polygon(args: argparse.Namespace) -> int:
    poly = parse_poly(args.poly)
    _check_poly(poly)
    p = args.p

    if args.phi:
        phi = parse_poly(args.phi)
        phi_bar = reduce_mod_p(phi, p)
        if not phi.is_monic or phi_bar.degree < 1 or not is_irreducible(phi_bar):
            valid = ", ".join(str(site.phi) for site in factor_sites(poly, p))
            raise PreconditionError(
                context_msg="phi=%s must be monic and irreducible modulo %d, the irreducible factors of %s modulo %d "
                "are: %s" % (phi, p, poly, p, valid)
            )
        phis = [phi]
    else:
        phis = [site.phi for site in factor_sites(poly, p)]

    sites = [_site_data(poly, phi, p) for phi in phis]

    if args.svg:
        try:
            with open(args.svg, mode="w", encoding="utf-8") as fd:
                fd.write(render_svg(sites[0][0]))
        except OSError as e:
            print("error: cannot write SVG to '%s': %s" % (args.svg, e), file=sys.stderr)
            return EXIT_INPUT_ERROR

    data = {"poly": str(poly), "p": p, "sites": [d for _, d in sites]}
    text = "\n\n".join(["F = %s, p = %d" % (poly, p)] + [_site_text(polygon, d) for polygon, d in sites])
    _emit(data, args.output_format, text=text)
    return 0


def cmd_factor(args: argparse.Namespace) -> int:
    poly = parse_poly(args.poly)
    terms = factor(reduce_mod_p(poly, args.p))

    data = [{"factor": str(t.factor), "multiplicity": t.multiplicity} for t in terms]
    text = "\n".join("%s  multiplicity %d" % (t.factor, t.multiplicity) for t in terms)
    _emit(data, args.output_format, text=text)
    return 0


def cmd_ore(args: argparse.Namespace) -> int:
    poly = parse_poly(args.poly)
    _check_poly(poly)
    report = analyze_prime(poly, args.p)

    data = report.to_dict()
    lines = ["F = %s, p = %d" % (poly, args.p)]
    for site, ind in zip(data["sites"], report.site_indices):
        lines.append("  phi = %s  l = %d  ind = %d  sides = %d" % (site["phi"], site["l"], ind, len(site["sides"])))

    lines.append("index lower bound: %d" % report.index_lower_bound)
    lines.append("regular: %s" % ("yes" if report.regular else "no"))
    decomposition = report.decomposition()
    if decomposition:
        lines.append(decomposition)

    if args.discriminant:
        valuations = discriminant_valuations(poly, report)
        data["discriminant_valuation"] = valuations.polynomial
        data["field_discriminant_valuation"] = valuations.field
        lines.append("v_%d(disc F) = %d" % (args.p, valuations.polynomial))
        if valuations.field is not None:
            lines.append("v_%d(disc K) = %d" % (args.p, valuations.field))

    _emit(data, args.output_format, text="\n".join(lines))
    return 0


def main(args: typing.Optional[typing.List[str]] = None) -> int:
    """Main program entry point, returns the process exit code."""
    parsed_args = parse_args(args)

    try:
        return parsed_args.func(parsed_args)
    except FactoringBudgetExceeded as e:
        print("error: %s, pass the factorization of m with --m-factored" % e.message, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except MontesError as e:
        print("error: %s" % e.message, file=sys.stderr)
        return EXIT_INPUT_ERROR


def _prime(value: str) -> int:
    p = int(value)
    if p < 2 or not isprime(p):
        raise argparse.ArgumentTypeError("%s is not a prime" % value)

    return p


def _add_format(parser: argparse.ArgumentParser, choices: typing.List[str], default: str) -> None:
    parser.add_argument(
        "--format",
        "--output-format",
        choices=choices,
        default=default,
        dest="output_format",
        type=lambda s: s.lower(),
        help="Set the output format, default is (%s). Using yaml requires the ruamel.yaml Python library to be "
        "installed pip install montes-lite[yaml]." % default,
    )


def parse_args(args: typing.Optional[typing.List[str]]) -> argparse.Namespace:
    """Parse and return args."""
    parser = argparse.ArgumentParser(
        prog="montes-lite",
        description="Newton polygon analysis of integer polynomials and classification of pure fields of degree "
        "2^u*3^v*5^t.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    classify_parser = commands.add_parser("classify", help="Classify the field defined by x^n - m.")
    classify_parser.set_defaults(func=cmd_classify)
    for name in ["u", "v", "t"]:
        classify_parser.add_argument("--%s" % name, dest=name, type=int, required=True, help="Exponent, 1 to 6.")
    classify_parser.add_argument("--m", dest="m", type=int, required=True, help="Square-free radicand, |m| <= 2^63.")
    classify_parser.add_argument(
        "--s",
        dest="s",
        type=int,
        default=1,
        help="Classify x^n - m^s instead, s must be coprime to 30 and below n.",
    )
    classify_parser.add_argument(
        "--m-factored",
        dest="m_factored",
        help="The factorization of |m| like '3*5^2*7', skips factoring m which may otherwise exceed the budget.",
    )
    classify_parser.add_argument(
        "--variant",
        choices=[v.value for v in Variant],
        default=Variant.proof.value,
        help="Which reading of the congruence rules to apply, default is (proof).",
    )
    _add_format(classify_parser, ["text", "json", "yaml"], "text")
    classify_parser.add_argument(
        "--json",
        dest="output_format",
        action="store_const",
        const="json",
        help="Shortcut for --format json.",
    )

    scan_parser = commands.add_parser("scan", help="Classify x^n - m for every square-free m in a range.")
    scan_parser.set_defaults(func=cmd_scan)
    for name in ["u", "v", "t"]:
        scan_parser.add_argument("--%s" % name, dest=name, type=int, default=1, help="Exponent, 1 to 6.")
    scan_parser.add_argument("--m-from", dest="m_from", type=int, required=True, help="First m, inclusive.")
    scan_parser.add_argument("--m-to", dest="m_to", type=int, required=True, help="Last m, inclusive.")
    scan_parser.add_argument("--out", dest="out", help="Write the rows to this path instead of stdout.")
    scan_parser.add_argument(
        "--variant",
        choices=[v.value for v in Variant],
        default=Variant.proof.value,
        help="Which reading of the congruence rules to apply, default is (proof).",
    )
    scan_parser.add_argument(
        "--workers",
        dest="workers",
        type=int,
        default=1,
        help="Number of worker processes, the output does not depend on it.",
    )
    _add_format(scan_parser, ["csv", "json"], "csv")

    polygon_parser = commands.add_parser("polygon", help="Show the principal phi-Newton polygons of a polynomial.")
    polygon_parser.set_defaults(func=cmd_polygon)
    polygon_parser.add_argument("--poly", dest="poly", required=True, help="Monic polynomial in x like 'x^30+7'.")
    polygon_parser.add_argument("--p", dest="p", type=_prime, required=True, help="The prime.")
    polygon_parser.add_argument(
        "--phi",
        dest="phi",
        help="Monic polynomial irreducible modulo p, defaults to every irreducible factor of the polynomial mod p.",
    )
    polygon_parser.add_argument("--svg", dest="svg", help="Also draw the polygon of phi as SVG to this path.")
    _add_format(polygon_parser, ["text", "json", "yaml"], "text")

    factor_parser = commands.add_parser("factor", help="Factor a polynomial modulo p.")
    factor_parser.set_defaults(func=cmd_factor)
    factor_parser.add_argument("--poly", dest="poly", required=True, help="Polynomial in x like 'x^12+1'.")
    factor_parser.add_argument("--p", dest="p", type=_prime, required=True, help="The prime, at most 10^4.")
    _add_format(factor_parser, ["text", "json", "yaml"], "text")

    ore_parser = commands.add_parser("ore", help="Run the first order Ore analysis of a polynomial at p.")
    ore_parser.set_defaults(func=cmd_ore)
    ore_parser.add_argument("--poly", dest="poly", required=True, help="Monic polynomial in x like 'x^30+7'.")
    ore_parser.add_argument("--p", dest="p", type=_prime, required=True, help="The prime.")
    ore_parser.add_argument(
        "--discriminant",
        dest="discriminant",
        action="store_true",
        help="Also report the p-adic valuations of the polynomial and field discriminants.",
    )
    _add_format(ore_parser, ["text", "json", "yaml"], "text")

    if HAS_ARGCOMPLETE:
        argcomplete.autocomplete(parser)

    parsed_args = parser.parse_args(args)

    if parsed_args.output_format == "yaml" and not HAS_YAML:
        parser.error("Cannot output as yaml as ruamel.yaml is not installed.")

    if getattr(parsed_args, "svg", None) and not HAS_MATPLOTLIB:
        parser.error("Cannot draw the polygon as SVG as matplotlib is not installed.")

    if parsed_args.command in ["classify", "scan"]:
        if not all(1 <= getattr(parsed_args, n) <= MAX_EXPONENT for n in ["u", "v", "t"]):
            parser.error("u, v and t must lie in 1..%d" % MAX_EXPONENT)

    if parsed_args.command == "classify" and abs(parsed_args.m) > MAX_ABS_M:
        parser.error("|m| must not exceed 2^63")

    if parsed_args.command == "scan":
        if parsed_args.m_to - parsed_args.m_from + 1 > MAX_SCAN_RANGE:
            parser.error("the scan range must not hold more than %d values" % MAX_SCAN_RANGE)

        if parsed_args.workers < 1:
            parser.error("--workers must be at least 1")

    if parsed_args.command == "factor" and parsed_args.p > MAX_FACTOR_PRIME:
        parser.error("p must not exceed %d" % MAX_FACTOR_PRIME)

    return parsed_args


if __name__ == "__main__":  # pragma: nocover
    sys.exit(main(sys.argv[1:]))
