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

"""Harish-Chandra images of the integrals.

The image of x_i d/dx_i is the coordinate xi_i, and a coefficient function
is replaced by the constant term of its expansion in the region
|x_1| >> |x_2| >> ... >> |x_{n+m}|; in particular x_i/(x_i - x_j) goes to 1
for i < j and to 0 for i > j.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy
from sympy import binomial
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from errors import InvalidInput
from laurent import ONE
from laurent import ZERO
from laurent import LaurentPoly
from laurent import LocalizedFn
from laurent import format_rational
from laurent import to_rational
from laurent import unit_vector
from linalg import SpanSolver

LOGGER = logging.getLogger(__name__)

DEFAULT_SAMPLES = 20


@lru_cache(maxsize=None)
def xi_ring(nvars):
    if nvars < 1:
        raise InvalidInput("A polynomial ring needs at least one variable, got %d" % nvars)
    return ring(",".join("xi%d" % (r + 1) for r in range(nvars)), QQ)[0]


# Polynomial in xi_1..xi_N over QQ, backed by a sympy PolyElement.
class HCPolynomial(object):
    __slots__ = ("nvars", "poly")

    def __init__(self, nvars, terms=None):
        cleaned = {}
        for degree, coefficient in (terms or {}).items():
            degree = tuple(int(d) for d in degree)
            if len(degree) != nvars or any(d < 0 for d in degree):
                raise InvalidInput("Bad multi-degree %r for %d variables" % (degree, nvars))
            cleaned[degree] = cleaned.get(degree, ZERO) + to_rational(coefficient)
        self.nvars = nvars
        self.poly = xi_ring(nvars).from_dict(cleaned)

    @classmethod
    def from_poly(cls, poly):
        result = cls.__new__(cls)
        result.nvars = poly.ring.ngens
        result.poly = poly
        return result

    @classmethod
    def constant(cls, nvars, value=1):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, index, scale=1):
        return cls.from_poly(xi_ring(nvars).gens[index] * to_rational(scale))

    def items(self):
        return self.poly.items()

    def sorted_terms(self):
        return sorted(self.poly.items())

    def degree(self):
        return max((sum(d) for d in self.poly.itermonoms()), default=0)

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, other):
        if not isinstance(other, HCPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.poly == other.poly

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.nvars, frozenset(self.poly.items())))

    def _check_shape(self, other):
        if self.nvars != other.nvars:
            raise InvalidInput("Polynomials in %d and %d variables" % (self.nvars, other.nvars))

    def __add__(self, other):
        self._check_shape(other)
        return HCPolynomial.from_poly(self.poly + other.poly)

    def __neg__(self):
        return HCPolynomial.from_poly(-self.poly)

    def __sub__(self, other):
        self._check_shape(other)
        return HCPolynomial.from_poly(self.poly - other.poly)

    def scale(self, factor):
        return HCPolynomial.from_poly(self.poly * to_rational(factor))

    def __mul__(self, other):
        if not isinstance(other, HCPolynomial):
            return self.scale(other)
        self._check_shape(other)
        return HCPolynomial.from_poly(self.poly * other.poly)

    __rmul__ = scale

    def __pow__(self, power):
        return HCPolynomial.from_poly(self.poly ** power)

    def evaluate(self, point):
        point = [to_rational(value) for value in point]
        if len(point) != self.nvars:
            raise InvalidInput("Point of length %d for %d variables" % (len(point), self.nvars))
        return self.poly.evaluate(list(zip(self.poly.ring.gens, point)))

    # f(xi + offset) as a polynomial in xi.
    def shift(self, offset):
        offset = [to_rational(value) for value in offset]
        gens = self.poly.ring.gens
        return HCPolynomial.from_poly(self.poly.compose([(g, g + c) for g, c in zip(gens, offset)]))

    # f(xi_{permutation[0]}, ..., xi_{permutation[N-1]}).
    def permute(self, permutation):
        gens = self.poly.ring.gens
        return HCPolynomial.from_poly(self.poly.compose([(gens[r], gens[permutation[r]]) for r in range(self.nvars)]))

    def to_text(self):
        if not self.poly:
            return "0"
        pieces = []
        for degree, coefficient in sorted(self.poly.items(), reverse=True):
            factors = [
                ("xi%d" % (r + 1)) + ("^%d" % power if power > 1 else "")
                for r, power in enumerate(degree)
                if power
            ]
            pieces.append("(%s)%s" % (format_rational(coefficient), "".join("*" + f for f in factors)))
        return " + ".join(pieces)

    def __repr__(self):
        return "HCPolynomial(%s)" % self.to_text()

    def to_json(self):
        return {
            "vars": self.nvars,
            "terms": [
                {"deg": list(degree), "coef": format_rational(coefficient)}
                for degree, coefficient in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                int(data["vars"]),
                {tuple(term["deg"]): to_rational(str(term["coef"])) for term in data["terms"]},
            )
        except (KeyError, TypeError) as exc:
            raise InvalidInput("Malformed HC polynomial JSON: %s" % exc)


@lru_cache(maxsize=None)
def hc_partial(i, p, params):
    if p < 1:
        raise InvalidInput("Operator order must be at least 1, got %d" % p)
    first = HCPolynomial.variable(params.size, i, params.kpow(params.parity(i)))
    if p == 1:
        return first
    previous = hc_partial(i, p - 1, params)
    result = first * previous
    for j in range(i + 1, params.size):
        difference = previous - hc_partial(j, p - 1, params)
        result = result - difference.scale(params.kpow(1 - params.parity(j)))
    return result


@lru_cache(maxsize=None)
def hc_integral(p, params):
    total = HCPolynomial(params.size)
    for i in range(params.size):
        total = total + hc_partial(i, p, params).scale(params.kpow(-params.parity(i)))
    return total


def chi_eval(weight, p, params):
    if len(weight) != params.size:
        raise InvalidInput("Weight of length %d for %d variables" % (len(weight), params.size))
    return hc_integral(p, params).evaluate(weight)


def character(weight, pmax, params):
    return tuple(chi_eval(weight, p, params) for p in range(1, pmax + 1))


@dataclass(frozen=True)
class DeformedWeylVector:
    entries: Tuple

    def to_json(self):
        return [format_rational(value) for value in self.entries]


def rho_k(params):
    n, m, k = params.n, params.m, params.k
    entries = [(k * (2 * i - n - 1) - m) / 2 for i in range(1, n + 1)]
    entries += [((2 * j - m - 1) / k + n) / 2 for j in range(1, m + 1)]
    return DeformedWeylVector(tuple(to_rational(value) for value in entries))


# Diagonal of the bilinear form: (e_i, e_i) = 1 on x-indices, k on y-indices.
def form_diagonal(params):
    return [ONE] * params.n + [params.k] * params.m


def bilinear_form(u, v, params):
    return sum(
        (to_rational(a) * to_rational(b) * g for a, b, g in zip(u, v, form_diagonal(params))),
        ZERO,
    )


def random_rational(rng, bound=40, max_denominator=9):
    return QQ(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, max_denominator + 1)))


@dataclass
class ImageReport:
    passed: bool
    symmetry_failures: list
    hyperplane_failures: list
    samples_checked: int

    def to_json(self):
        return {
            "passed": self.passed,
            "symmetry_failures": self.symmetry_failures,
            "hyperplane_failures": self.hyperplane_failures,
            "samples_checked": self.samples_checked,
        }


# Membership in the image: f(eta - rho) is symmetric under S_n x S_m, and
# f(xi - e_i + e_j) = f(xi) on each hyperplane (xi + rho, e_i - e_j) = (1 + k)/2.
def check_image_membership(f, params, samples=DEFAULT_SAMPLES, seed=0):
    if f.nvars != params.size:
        raise InvalidInput("Polynomial in %d variables for %d" % (f.nvars, params.size))
    rho = rho_k(params).entries
    shifted = f.shift([-value for value in rho])
    symmetry_failures = []
    for start, end in ((0, params.n), (params.n, params.size)):
        for a in range(start, end - 1):
            permutation = list(range(params.size))
            permutation[a], permutation[a + 1] = a + 1, a
            if shifted.permute(permutation) != shifted:
                symmetry_failures.append([a, a + 1])

    rng = numpy.random.default_rng(seed)
    hyperplane_failures = []
    checked = 0
    k = params.k
    for i in range(params.n):
        for j in range(params.n, params.size):
            for _ in range(samples):
                point = [random_rational(rng) for _ in range(params.size)]
                point[i] = (1 + k) / 2 + k * (point[j] + rho[j]) - rho[i]
                moved = list(point)
                moved[i] -= 1
                moved[j] += 1
                checked += 1
                if f.evaluate(moved) != f.evaluate(point):
                    hyperplane_failures.append(
                        {"pair": [i, j], "point": [format_rational(v) for v in point]}
                    )
                    break
    passed = not symmetry_failures and not hyperplane_failures
    LOGGER.debug("Image membership: passed=%s after %d hyperplane samples", passed, checked)
    return ImageReport(passed, symmetry_failures, hyperplane_failures, checked)


# A side is an HCPolynomial or a list of (coefficient, word) with word a
# tuple of integral orders; the empty word is the identity.
def operator_image(side, params):
    if isinstance(side, HCPolynomial):
        return side
    total = HCPolynomial(params.size)
    for coefficient, word in side:
        term = HCPolynomial.constant(params.size, to_rational(coefficient))
        for order in word:
            term = term * hc_integral(order, params)
        total = total + term
    return total


def certify_operator_identity(lhs, rhs, params):
    return operator_image(lhs, params) == operator_image(rhs, params)


# Coefficients c_w with target = sum_w c_w * image(L_w), or None.
def solve_operator_combination(target, words, params):
    images = [operator_image([(1, tuple(word))], params) for word in words]
    solver = SpanSolver([dict(image.items()) for image in images])
    return solver.coordinates(dict(operator_image(target, params).items()))


# Constant term of num / prod (x_a - x_b)^e in the region |x_1| >> ... >> |x_N|.
def coefficient_value(fn):
    if isinstance(fn, LaurentPoly):
        fn = LocalizedFn.from_poly(fn)
    size = fn.nvars
    num = fn.num
    for (a, _), power in fn.den.items():
        num = num.shift(unit_vector(size, a, -power))
    depth = max(
        (sum((size - r) * e for r, e in enumerate(exponent)) for exponent, _ in num.items()),
        default=0,
    )
    if depth < 0:
        return ZERO
    series = LaurentPoly.constant(fn.n, fn.m)
    for (a, b), power in sorted(fn.den.items()):
        step = unit_vector(size, b)
        step = tuple(s - (1 if r == a else 0) for r, s in enumerate(step))
        drop = b - a
        factor = LaurentPoly(
            fn.n,
            fn.m,
            {
                tuple(s * t for s in step): int(binomial(t + power - 1, power - 1))
                for t in range(depth // drop + 1)
            },
        )
        series = series * factor
        series = LaurentPoly(
            fn.n,
            fn.m,
            {
                e: c
                for e, c in series.items()
                if -sum((size - r) * x for r, x in enumerate(e)) <= depth
            },
        )
    total = ZERO
    for exponent, coefficient in num.items():
        total += coefficient * series.coefficient(tuple(-e for e in exponent))
    return total


# Image of sum_alpha c_alpha(x) * prod_i (x_i d/dx_i)^alpha_i.
def coefficient_operator_image(terms, params):
    total = HCPolynomial(params.size)
    for fn, powers in terms:
        value = coefficient_value(fn)
        if value:
            total = total + HCPolynomial(params.size, {tuple(powers): value})
    return total
