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

"""Verification suites run by ``cli.py verify``.

Each suite takes a RunConfig and returns
{"suite", "passed", "checks", "failures", "findings"}; findings are
recorded observations that do not fail the suite.
"""

import itertools
import logging

import numpy
from sympy.polys.domains import QQ

import gl12
from cms import LOCALIZED
from cms import DeformedParams
from cms import action_matrices
from cms import apply_integral
from cms import apply_word
from errors import CmsError
from errors import InfiniteClass
from harish_chandra import certify_operator_identity
from harish_chandra import chi_eval
from harish_chandra import check_image_membership
from harish_chandra import hc_integral
from laurent import LaurentPoly
from laurent import format_rational
from linalg import is_zero_matrix
from quasi import invariant_subspace_basis
from quasi import is_quasi_invariant
from quasi import schur_generator
from spectral import decompose
from spectral import predicted_block_dimension
from weights import SYMMETRIC_K
from weights import atypicality_degree
from weights import class_by_search
from weights import dominant_admissible_weights
from weights import enumerate_class
from weights import from_ab
from weights import invariant_form_product
from weights import is_spherically_typical
from weights import kac_flag
from weights import least_representative
from weights import odd_reflection_F
from weights import sharp
from weights import to_ab
from weights import typicality_invariant_form

LOGGER = logging.getLogger(__name__)

KAC_FLAG_INSTANCES = [
    ((2, 0, 0), 1, 1, 1),
    ((0, 0, 0), 1, 1, 2),
    ((4, 2, -2, -2, -3, -3), 2, 2, 4),
]


class Tally(object):
    def __init__(self, suite):
        self.suite = suite
        self.checks = 0
        self.failures = []
        self.findings = []

    def check(self, condition, **failure):
        self.checks += 1
        if not condition:
            self.failures.append(failure)
        return condition

    def error(self, exc, **context):
        self.checks += 1
        context.update(exc.to_dict())
        self.failures.append(context)

    def result(self):
        passed = not self.failures
        LOGGER.info(
            "Suite %s: %d checks, %d failures, %d findings",
            self.suite,
            self.checks,
            len(self.failures),
            len(self.findings),
        )
        return {
            "suite": self.suite,
            "passed": passed,
            "checks": self.checks,
            "failures": self.failures,
            "findings": self.findings,
        }


def random_k(rng):
    numerator = int(rng.integers(1, 6)) * (1 if rng.integers(0, 2) else -1)
    return QQ(numerator, int(rng.integers(1, 5)))


def random_dominant(rng, n, m, low=-1, high=1):
    x_part = sorted((int(v) for v in rng.integers(low, high + 1, size=n)), reverse=True)
    y_part = sorted((int(v) for v in rng.integers(low, high + 1, size=m)), reverse=True)
    return tuple(x_part + y_part)


def random_laurent(rng, params, terms=3, bound=2):
    poly = LaurentPoly.zero(params.n, params.m)
    for _ in range(terms):
        exponent = tuple(int(v) for v in rng.integers(-bound, bound + 1, size=params.size))
        poly = poly + LaurentPoly.monomial(params.n, params.m, exponent, int(rng.integers(1, 5)))
    return poly


def k_values(rng, count):
    return [SYMMETRIC_K] + [random_k(rng) for _ in range(count)]


def gl12_suite(config, bound=4):
    tally = Tally("gl12")
    report = gl12.verify_jordan_table(bound)
    tally.checks += report.checks - 1
    tally.check(report.passed, check="jordan table", witness=report.witness)
    tally.findings.extend(report.findings)
    for element in gl12.basis_family(bound):
        tally.check(
            bool(is_quasi_invariant(element.value, gl12.PARAMS)),
            check="quasi-invariant",
            element=element.label(),
        )
    for element in gl12.basis_family(min(bound, 3)):
        recursion = apply_integral(2, element.value, gl12.PARAMS)
        tally.check(
            gl12.l2_explicit(element.value) == recursion,
            check="explicit L2 equals recursion",
            element=element.label(),
        )
    for i in range(-bound, bound + 1):
        eigenvalue = -(i ** 2)
        value = gl12.psi(i).value
        once = apply_integral(2, value, gl12.PARAMS) - value.scale(eigenvalue)
        twice = apply_integral(2, once, gl12.PARAMS) - once.scale(eigenvalue)
        tally.check(bool(once) and not twice, check="Jordan block of size 2", i=i)
    return tally.result()


def characters_suite(config, bound=5):
    tally = Tally("characters")
    for i, j in itertools.product(range(-bound, bound + 1), repeat=2):
        tally.check(
            chi_eval((i, j), 2, gl12.PARAMS) == gl12.lambda_ij(i, j),
            check="chi_2 equals lambda",
            weight=[i, j],
        )
        tally.check(chi_eval((i, j), 1, gl12.PARAMS) == i + j, check="chi_1 is the degree", weight=[i, j])
    return tally.result()


def _generator_subspace(weight, params):
    generator = schur_generator(weight, params)
    return invariant_subspace_basis(generator.exponents(), params, degree=sum(weight))


def commutativity_suite(config, shapes=((1, 1), (2, 1), (1, 2)), weights_per_shape=5, random_functions=20):
    tally = Tally("commutativity")
    rng = numpy.random.default_rng(config.seed)
    for (n, m), k in itertools.product(shapes, k_values(rng, 2)):
        params = DeformedParams(n, m, k)
        for _ in range(weights_per_shape):
            weight = random_dominant(rng, n, m)
            context = {"shape": [n, m], "k": format_rational(k), "weight": list(weight)}
            try:
                basis = _generator_subspace(weight, params)
                matrices = action_matrices(basis, (1, 2, 3), params)
            except CmsError as exc:
                tally.error(exc, check="action on V", **context)
                continue
            for p, q in ((1, 2), (1, 3), (2, 3)):
                commutator = matrices[p] * matrices[q] - matrices[q] * matrices[p]
                tally.check(is_zero_matrix(commutator), check="commutator", p=p, q=q, **context)
    params = DeformedParams(2, 1, random_k(rng))
    for _ in range(random_functions):
        f = random_laurent(rng, params)
        difference = apply_word((2, 3), f, params, LOCALIZED) - apply_word((3, 2), f, params, LOCALIZED)
        tally.check(not difference, check="localized commutator", f=f.to_text(), k=format_rational(params.k))
    return tally.result()


def hc_image_suite(config, max_order=4, max_size=4):
    tally = Tally("hc-image")
    rng = numpy.random.default_rng(config.seed)
    shapes = [(n, s - n) for s in range(2, max_size + 1) for n in range(1, s)]
    for (n, m), k in itertools.product(shapes, k_values(rng, 3)):
        params = DeformedParams(n, m, k)
        for p in range(1, max_order + 1):
            report = check_image_membership(hc_integral(p, params), params, config.samples, seed=config.seed + p)
            tally.check(
                report.passed,
                check="image membership",
                shape=[n, m],
                k=format_rational(k),
                p=p,
                report=report.to_json(),
            )
    return tally.result()


def _class_members(weight, n, m):
    members = enumerate_class(to_ab(weight, n, m))
    return [from_ab(member) for member in members]


def spectral_suite(config, shapes=((1, 1), (2, 1)), bound=3):
    tally = Tally("spectral")
    for n, m in shapes:
        params = DeformedParams(n, m, SYMMETRIC_K)
        for weight in dominant_admissible_weights(n, m, -2 * bound, 2 * bound):
            sharp_weight = sharp(weight, n, m)
            if any(abs(e) > bound for e in sharp_weight):
                continue
            pair = to_ab(weight, n, m)
            try:
                least = least_representative(pair)
            except InfiniteClass:
                continue
            context = {"shape": [n, m], "weight": list(sharp_weight)}
            try:
                members = _class_members(weight, n, m)
                member_sharps = {sharp(member, n, m) for member in members}
                seed = set()
                for member in member_sharps:
                    seed.update(schur_generator(member, params).exponents())
                basis = invariant_subspace_basis(seed, params, degree=sum(sharp_weight))
                blocks = decompose(basis, params)
            except CmsError as exc:
                tally.error(exc, check="decompose", **context)
                continue
            block = next((b for b in blocks if sharp_weight in b.representatives), None)
            if not tally.check(block is not None, check="block of the weight", **context):
                continue
            searched = class_by_search(weight, n, m, config.radius)
            expected = 2 ** atypicality_degree(least)
            tally.check(
                block.dimension == expected == len(members) == len(searched)
                and predicted_block_dimension(sharp_weight, params) == expected,
                check="block dimension",
                dim=block.dimension,
                expected=expected,
                enumerated=len(members),
                searched=len(searched),
                **context
            )
            tally.check(
                set(block.representatives) == member_sharps,
                check="block representatives",
                reps=[list(e) for e in block.representatives],
                **context
            )
            for other in blocks:
                if other.dimension == 1:
                    tally.check(other.is_eigenspace(), check="singleton nilpotency", reps=[list(e) for e in other.representatives], **context)
            if (n, m) == (1, 1) and expected == 2:
                tally.check(block.nilpotency.get(2) == 2, check="two-element block nilpotency", **context)
    return tally.result()


def typicality_suite(config, shapes=((1, 1), (2, 1), (1, 2), (2, 2)), bound=6):
    tally = Tally("typicality")
    for n, m in shapes:
        for weight in dominant_admissible_weights(n, m, -bound, bound):
            pair = to_ab(weight, n, m)
            disjoint = not set(pair.A) & set(pair.B)
            star = is_spherically_typical(weight, n, m)
            tally.check(star == disjoint, check="star product against A and B", shape=[n, m], weight=list(weight))
            invariant = typicality_invariant_form(weight, n, m)
            if invariant != star:
                tally.findings.append(
                    {
                        "finding": "invariant form disagrees with the star product",
                        "shape": [n, m],
                        "weight": list(weight),
                        "star": star,
                        "invariant_form": invariant,
                        "invariant_product": format_rational(invariant_form_product(weight, n, m)),
                    }
                )
    return tally.result()


def oddreflect_suite(config):
    tally = Tally("oddreflect")
    cases = [
        (((3, 2, 5), (3, 1, 2, 4)), ((4, 1, 3, 5), (5, 3, 5))),
        (((2,), (7,)), ((7,), (2,))),
        (((1,), (1,)), ((2,), (2,))),
    ]
    for (a_values, b_values), expected in cases:
        got = odd_reflection_F(a_values, b_values)
        tally.check(got == expected, check="odd reflection", A=list(a_values), B=list(b_values), got=[list(v) for v in got])
    return tally.result()


def kacflag_suite(config):
    tally = Tally("kacflag")
    for weight, n, m, size in KAC_FLAG_INSTANCES:
        try:
            flag = kac_flag(weight, n, m)
        except CmsError as exc:
            tally.error(exc, check="kac flag", weight=list(weight))
            continue
        members = [member for member, _ in flag]
        searched = class_by_search(weight, n, m, config.radius)
        tally.check(len(flag) == size, check="flag size", weight=list(weight), size=len(flag), expected=size)
        tally.check(members[0] == tuple(weight), check="least member first", weight=list(weight))
        tally.check(set(members) == set(searched), check="flag equals searched class", weight=list(weight))
        tally.check(all(multiplicity == 1 for _, multiplicity in flag), check="multiplicities", weight=list(weight))
    return tally.result()


def bridge_suite(config, bound=3):
    tally = Tally("bridge")
    coefficients = gl12.derive_bridge()
    tally.check(
        list(coefficients) == gl12.BRIDGE_COEFFICIENTS,
        check="derived bridge coefficients",
        got=[format_rational(c) for c in coefficients],
    )
    tally.check(gl12.certify_bridge(coefficients), check="bridge identity on images")
    tally.check(
        certify_operator_identity(gl12.l2_image(), [(1, (2,))], gl12.PARAMS),
        check="explicit L2 image equals recursion image",
    )
    witness = gl12.bridge_counterexample(bound, coefficients)
    tally.check(witness is None, check="bridge identity on basis functions", witness=witness)
    return tally.result()


def generators_suite(config, shapes=((1, 1), (2, 1), (2, 2)), count=10):
    tally = Tally("generators")
    rng = numpy.random.default_rng(config.seed)
    for (n, m), k in itertools.product(shapes, k_values(rng, 3)):
        params = DeformedParams(n, m, k)
        for _ in range(count):
            weight = random_dominant(rng, n, m, -2, 2)
            report = is_quasi_invariant(schur_generator(weight, params), params)
            tally.check(
                report.holds,
                check="generator quasi-invariance",
                shape=[n, m],
                k=format_rational(k),
                weight=list(weight),
                witness=report.witness,
            )
    return tally.result()


SUITES = {
    "gl12": gl12_suite,
    "characters": characters_suite,
    "commutativity": commutativity_suite,
    "hc-image": hc_image_suite,
    "spectral": spectral_suite,
    "typicality": typicality_suite,
    "oddreflect": oddreflect_suite,
    "kacflag": kacflag_suite,
    "bridge": bridge_suite,
    "generators": generators_suite,
}


def run_suites(names, config):
    if "all" in names:
        names = list(SUITES)
    results = []
    for name in names:
        LOGGER.info("Running suite %s", name)
        results.append(SUITES[name](config))
    return results
