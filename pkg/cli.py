#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# Upside Travel, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import argparse
import logging
import os
import sys

import simplejson as json

import acceptance
import gl12
import metrics
from cms import MODES
from cms import STRICT
from cms import apply_integrals
from cms import apply_partial
from common import CMS_LOG_LEVEL
from common import CMS_PROCESS_METRICS
from common import get_timestamp
from common import load_run_config
from common import str_to_bool
from errors import CmsError
from errors import UsageError
from harish_chandra import character
from harish_chandra import check_image_membership
from harish_chandra import hc_integral
from laurent import format_rational
from laurent import function_from_json
from quasi import invariant_subspace_basis
from spectral import decompose
from weights import atypicality_degree
from weights import class_by_search
from weights import enumerate_class
from weights import from_ab
from weights import is_spherically_typical
from weights import kac_flag
from weights import least_representative
from weights import odd_reflection_F
from weights import to_ab
from weights import typicality_invariant_form

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# A path to an existing file is read; anything else must be inline JSON.
def load_json_arg(value):
    text = value.strip()
    if os.path.isfile(value):
        try:
            with open(value) as handle:
                text = handle.read()
        except OSError as exc:
            raise UsageError("Cannot read %s: %s" % (value, exc))
    elif not text.startswith(("[", "{", "-", '"')) and not text[:1].isdigit():
        raise UsageError("Cannot read %s: no such file" % (value,))
    try:
        return json.loads(text)
    except ValueError as exc:
        raise UsageError("Invalid JSON in %s: %s" % (value, exc))


def parse_int_list(value):
    try:
        return [int(piece) for piece in value.split(",") if piece.strip()]
    except ValueError:
        raise UsageError("Expected comma separated integers, got %r" % (value,))


def run_apply(args, config):
    params = config.params()
    f = function_from_json(load_json_arg(args.f))
    orders = parse_int_list(args.p)
    if args.i is not None:
        images = {order: apply_partial(args.i, order, f, params, args.mode) for order in orders}
    else:
        images = apply_integrals(orders, f, params, args.mode)
    return {"images": {str(order): image.to_json() for order, image in sorted(images.items())}}, True


def run_hc(args, config):
    params = config.params()
    orders = parse_int_list(args.p) if args.p else list(range(1, config.pmax + 1))
    report = {"images": {str(p): hc_integral(p, params).to_json() for p in orders}}
    passed = True
    if args.weight:
        weight = load_json_arg(args.weight)
        report["character"] = [format_rational(value) for value in character(weight, max(orders), params)]
    if args.check_image:
        checks = {}
        for p in orders:
            membership = check_image_membership(hc_integral(p, params), params, config.samples, config.seed)
            checks[str(p)] = membership.to_json()
            passed = passed and membership.passed
        report["image_membership"] = checks
    return report, passed


def run_subspace(args, config):
    basis = invariant_subspace_basis(load_json_arg(args.seed), config.params(), degree=args.degree)
    return basis.to_json(), True


def run_decompose(args, config):
    params = config.params()
    basis = invariant_subspace_basis(load_json_arg(args.seed), params, degree=args.degree)
    blocks = decompose(basis, params, config.pmax)
    return {"dimension": basis.dimension, "blocks": [block.to_json() for block in blocks]}, True


def _weight_arg(args, config):
    return tuple(load_json_arg(args.weight)), config.n, config.m


def run_class(args, config):
    weight, n, m = _weight_arg(args, config)
    pair = to_ab(weight, n, m)
    least = least_representative(pair)
    members = enumerate_class(pair)
    report = {
        "weight": list(weight),
        "pair": pair.to_json(),
        "least": least.to_json(),
        "atypicality": atypicality_degree(least),
        "members": [{"weight": list(from_ab(member)), "pair": member.to_json()} for member in members],
    }
    passed = True
    if args.search:
        searched = class_by_search(weight, n, m, config.radius)
        report["searched"] = [list(member) for member in searched]
        passed = sorted(searched) == sorted(from_ab(member) for member in members)
    return report, passed


def run_typical(args, config):
    weight, n, m = _weight_arg(args, config)
    pair = to_ab(weight, n, m)
    return {
        "weight": list(weight),
        "typical": is_spherically_typical(weight, n, m),
        "disjoint": not set(pair.A) & set(pair.B),
        "invariant_form": typicality_invariant_form(weight, n, m),
    }, True


def run_kacflag(args, config):
    weight, n, m = _weight_arg(args, config)
    return {"flag": [[list(member), multiplicity] for member, multiplicity in kac_flag(weight, n, m)]}, True


def run_oddreflect(args, config):
    moved_b, moved_a = odd_reflection_F(parse_int_list(args.a), parse_int_list(args.b))
    return {"B": list(moved_b), "A": list(moved_a)}, True


def run_gl12(args, config):
    report = {}
    passed = True
    if args.check_table is not None:
        table = gl12.verify_jordan_table(args.check_table)
        report["table"] = table.to_json()
        passed = passed and table.passed
    if args.demo:
        demo = gl12.spectral_demo(gl12.parse_window(args.window), args.radius)
        report["demo"] = demo
        passed = passed and demo["passed"]
    if args.bridge:
        coefficients = gl12.derive_bridge()
        certified = gl12.certify_bridge(coefficients)
        report["bridge"] = {
            "words": [list(word) for word in gl12.BRIDGE_WORDS],
            "coefficients": [format_rational(c) for c in coefficients],
            "certified": certified,
        }
        passed = passed and certified
    if not report:
        raise UsageError("gl12 needs --check-table, --demo or --bridge")
    return report, passed


def run_verify(args, config):
    names = args.suite or ["all"]
    unknown = [name for name in names if name != "all" and name not in acceptance.SUITES]
    if unknown:
        raise UsageError("Unknown suites: %s" % ", ".join(unknown))
    results = acceptance.run_suites(names, config)
    if str_to_bool(CMS_PROCESS_METRICS):
        metrics.send(env=os.getenv("ENV", ""), suite_results=results)
    return {"config": config.to_json(), "suites": results}, all(result["passed"] for result in results)


COMMANDS = {
    "apply": run_apply,
    "hc": run_hc,
    "subspace": run_subspace,
    "decompose": run_decompose,
    "class": run_class,
    "typical": run_typical,
    "kacflag": run_kacflag,
    "oddreflect": run_oddreflect,
    "gl12": run_gl12,
    "verify": run_verify,
}


class UsageParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", help="Number of x variables")
    common.add_argument("--m", help="Number of y variables")
    common.add_argument("--k", help="Deformation parameter as p/q")
    common.add_argument("--pmax", help="Highest integral order")
    common.add_argument("--output", choices=["json", "table"], help="Report format")
    common.add_argument("--config", help="Flat key = value configuration file")
    common.add_argument("--params", help="JSON object or file with n, m and k")
    common.add_argument("--verbose", action="store_true", help="Log at INFO level")

    parser = UsageParser(description="Deformed CMS integrals on Laurent quasi-invariants.")
    commands = parser.add_subparsers(dest="command", parser_class=UsageParser)
    commands.required = True

    apply_parser = commands.add_parser("apply", parents=[common], help="Apply L_p or d_i^(p)")
    apply_parser.add_argument("--input", "--f", dest="f", required=True, help="LaurentPoly or LocalizedFn JSON or file")
    apply_parser.add_argument("--p", required=True, help="Comma separated orders")
    apply_parser.add_argument("--i", type=int, help="Apply d_i^(p) instead of L_p")
    apply_parser.add_argument("--mode", choices=MODES, default=STRICT)

    hc_parser = commands.add_parser("hc", parents=[common], help="Harish-Chandra images")
    hc_parser.add_argument("--p", help="Comma separated orders, default 1..pmax")
    hc_parser.add_argument("--eval", "--weight", dest="weight", help="Evaluate the character at this weight")
    hc_parser.add_argument("--check-image", action="store_true", help="Check image membership")
    hc_parser.add_argument("--seed", help="Sampling seed")
    hc_parser.add_argument("--samples", help="Hyperplane samples per pair")

    for name, summary in (("subspace", "Quasi-invariant subspace V(f)"), ("decompose", "Spectral blocks of V(f)")):
        sub = commands.add_parser(name, parents=[common], help=summary)
        sub.add_argument("--seed", required=True, help="JSON list of seed exponents")
        sub.add_argument("--degree", type=int, help="Keep only this total degree")

    for name, summary in (
        ("class", "Equivalence class of an admissible weight"),
        ("typical", "Spherical typicality tests"),
        ("kacflag", "Kac flag of a typical weight"),
    ):
        sub = commands.add_parser(name, parents=[common], help=summary)
        sub.add_argument("--weight", required=True, help="Admissible weight of length n + 2m")
        if name == "class":
            sub.add_argument("--search", action="store_true", help="Cross-check by exhaustive search")
            sub.add_argument("--radius", help="Search radius")

    odd_parser = commands.add_parser("oddreflect", parents=[common], help="Odd reflection move")
    odd_parser.add_argument("--a", required=True, help="Comma separated A")
    odd_parser.add_argument("--b", required=True, help="Comma separated B")

    gl_parser = commands.add_parser("gl12", parents=[common], help="The one x, one y example")
    gl_parser.add_argument("--check-table", type=int, help="Verify the Jordan table up to this bound")
    gl_parser.add_argument("--demo", action="store_true", help="Spectral decomposition by degree")
    gl_parser.add_argument("--window", default="0..0", help="Degree window a..b")
    gl_parser.add_argument("--radius", type=int, default=4, help="Support box radius for the demo")
    gl_parser.add_argument("--bridge", action="store_true", help="Derive the third order bridge")

    verify_parser = commands.add_parser("verify", parents=[common], help="Run verification suites")
    verify_parser.add_argument("--suite", action="append", help="Suite name, repeatable; default all")
    verify_parser.add_argument("--seed", help="Sampling seed")
    verify_parser.add_argument("--samples", help="Hyperplane samples per pair")
    verify_parser.add_argument("--radius", help="Class search radius")
    return parser


def _flags(args):
    flags = {key: getattr(args, key, None) for key in ("n", "m", "k", "pmax", "output")}
    if args.command in ("hc", "verify"):
        flags["seed"] = args.seed
    for key in ("samples", "radius"):
        if args.command != "gl12":
            flags[key] = getattr(args, key, None)
    return flags


def render_table(report, indent=0):
    lines = []
    pad = "  " * indent
    if isinstance(report, dict):
        for key in sorted(report):
            value = report[key]
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append("%s%s:" % (pad, key))
                lines.extend(render_table(value, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, key, json.dumps(value, sort_keys=True)))
    elif isinstance(report, list):
        for item in report:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                lines.append("%s-" % pad)
                lines.extend(render_table(item, indent + 1))
            else:
                lines.append("%s- %s" % (pad, json.dumps(item, sort_keys=True)))
    return lines


def _is_flat(value):
    items = value.values() if isinstance(value, dict) else value
    return all(not isinstance(item, (dict, list)) for item in items)


def emit(report, output):
    if output == "table":
        sys.stdout.write("\n".join(render_table(report)) + "\n")
    else:
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def main(argv=None):
    logging.basicConfig(
        stream=sys.stderr,
        level=CMS_LOG_LEVEL.upper(),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.getLogger().setLevel(logging.INFO)
        config = load_run_config(_flags(args), args.config, args.params)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc.message)
        return EXIT_USAGE

    LOGGER.info("Script starting at %s", get_timestamp())
    try:
        report, passed = COMMANDS[args.command](args, config)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc.message)
        return EXIT_USAGE
    except CmsError as exc:
        LOGGER.error("%s failed: %s", args.command, exc.message)
        emit(exc.to_dict(), config.output)
        return EXIT_FAILED
    emit(report, config.output)
    LOGGER.info("Script finished at %s", get_timestamp())
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
