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

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional
from typing import Tuple

from sympy.utilities.iterables import multiset_permutations

from cms import DeformedParams
from errors import InvalidInput
from errors import InvalidWeight
from hull import hull_lattice_points
from laurent import LaurentPoly
from laurent import LocalizedFn
from laurent import divide_by_difference
from laurent import substitute_equal
from linalg import SpanSolver
from linalg import echelon_basis
from linalg import exact_matrix
from linalg import nullspace
from weights import dominance_leq

LOGGER = logging.getLogger(__name__)


def is_dominant(exponent, n):
    x_part, y_part = exponent[:n], exponent[n:]
    return all(a >= b for a, b in zip(x_part, x_part[1:])) and all(
        a >= b for a, b in zip(y_part, y_part[1:])
    )


def check_dominant(weight, params):
    weight = tuple(int(e) for e in weight)
    if len(weight) != params.size:
        raise InvalidWeight(
            "Weight %r has length %d, expected %d" % (weight, len(weight), params.size)
        )
    if not is_dominant(weight, params.n):
        raise InvalidWeight("Weight %r is not dominant" % (weight,))
    return weight


# Total order refining the dominance order: the weighted sum with weights
# N, N-1, ..., 1 equals the sum of all prefix sums, ties go lexicographic.
def echelon_key(exponent):
    size = len(exponent)
    return (sum((size - r) * e for r, e in enumerate(exponent)), tuple(exponent))


def leading_exponent(f):
    if not f:
        raise InvalidInput("The zero polynomial has no leading exponent")
    return max(f.exponents(), key=echelon_key)


def max_exponents(f):
    if not f:
        raise InvalidInput("The zero polynomial has no maximal exponents")
    exponents = f.exponents()
    return {
        e
        for e in exponents
        if not any(other != e and dominance_leq(e, other) for other in exponents)
    }


def symmetric_orbit(exponent, n):
    x_part, y_part = list(exponent[:n]), list(exponent[n:])
    x_orbit = [tuple(p) for p in multiset_permutations(x_part)] if x_part else [()]
    y_orbit = [tuple(p) for p in multiset_permutations(y_part)] if y_part else [()]
    return [x + y for x, y in itertools.product(x_orbit, y_orbit)]


def orbit_sum(exponent, params):
    return LaurentPoly(
        params.n, params.m, {e: 1 for e in symmetric_orbit(exponent, params.n)}
    )


@dataclass(frozen=True)
class QuasiInvarianceReport:
    holds: bool
    witness: Optional[Tuple] = None

    def __bool__(self):
        return self.holds


def _hyperplane_defect(f, i, j, params):
    combination = f.euler(i) - f.euler(params.n + j).scale(params.k)
    return substitute_equal(combination, i, params.n + j)


# Witnesses are ("transposition", a, a + 1) or ("hyperplane", i, j) with
# x-index i and y-index j, both 0-based.
def is_quasi_invariant(f, params):
    params.check_shape(f)
    for start, end in ((0, params.n), (params.n, params.size)):
        for a in range(start, end - 1):
            if f.transpose(a, a + 1) != f:
                return QuasiInvarianceReport(False, ("transposition", a, a + 1))
    for i in range(params.n):
        for j in range(params.m):
            if _hyperplane_defect(f, i, j, params):
                return QuasiInvarianceReport(False, ("hyperplane", i, j))
    return QuasiInvarianceReport(True)


@dataclass(frozen=True)
class SubspaceBasis:
    support: Tuple
    elements: Tuple
    params: DeformedParams

    @property
    def dimension(self):
        return len(self.elements)

    @cached_property
    def _solver(self):
        return SpanSolver([dict(element.items()) for element in self.elements])

    def coordinates(self, g):
        if isinstance(g, LocalizedFn):
            g = g.as_poly()
            if g is None:
                return None
        return self._solver.coordinates(dict(g.items()))

    def combination(self, coefficients):
        total = LaurentPoly.zero(self.params.n, self.params.m)
        for coefficient, element in zip(coefficients, self.elements):
            if coefficient:
                total = total + element.scale(coefficient)
        return total

    def to_json(self):
        return {
            "params": self.params.to_json(),
            "support": [list(e) for e in self.support],
            "basis": [element.to_json() for element in self.elements],
        }


def _closed_support(support_seed, params, degree):
    seed = set()
    for exponent in support_seed:
        exponent = tuple(int(e) for e in exponent)
        if len(exponent) != params.size:
            raise InvalidInput(
                "Seed exponent %r has length %d, expected %d"
                % (exponent, len(exponent), params.size)
            )
        seed.update(symmetric_orbit(exponent, params.n))
    if not seed:
        raise InvalidInput("The support seed is empty")
    predicate = None
    if degree is not None:
        predicate = lambda e: sum(e) == degree  # noqa: E731
    return hull_lattice_points(seed, predicate)


# Exact basis of V = {g quasi-invariant : S(g) within the closed support};
# with degree set, only its homogeneous component of that total degree.
# Elements come in echelon form: distinct leading exponents, decreasing.
def invariant_subspace_basis(support_seed, params, degree=None):
    support = _closed_support(support_seed, params, degree)
    representatives = sorted(
        (e for e in support if is_dominant(e, params.n)), key=echelon_key, reverse=True
    )
    orbit_sums = [orbit_sum(e, params) for e in representatives]
    rows = {}
    for column, poly in enumerate(orbit_sums):
        for i in range(params.n):
            for j in range(params.m):
                for exponent, value in _hyperplane_defect(poly, i, j, params).items():
                    rows.setdefault((i, j, exponent), {})[column] = value
    count = len(representatives)
    if rows:
        matrix = exact_matrix(
            [[row.get(c, 0) for c in range(count)] for _, row in sorted(rows.items())],
            count,
        )
        solutions = nullspace(matrix)
    else:
        solutions = [tuple(1 if r == c else 0 for r in range(count)) for c in range(count)]
    vectors, _ = echelon_basis(solutions, count)
    elements = []
    for vector in vectors:
        element = LaurentPoly.zero(params.n, params.m)
        for coefficient, poly in zip(vector, orbit_sums):
            if coefficient:
                element = element + poly.scale(coefficient)
        elements.append(element)
    LOGGER.info(
        "Invariant subspace: %d support points, %d orbits, %d conditions, dimension %d",
        len(support),
        count,
        len(rows),
        len(elements),
    )
    return SubspaceBasis(
        support=tuple(sorted(support)), elements=tuple(elements), params=params
    )


def _permutation_sign(permutation):
    sign = 1
    for a, b in itertools.combinations(range(len(permutation)), 2):
        if permutation[a] > permutation[b]:
            sign = -sign
    return sign


# Schur Laurent polynomial s_partition in the variables `indices`, as the
# ratio of the alternant a_{partition + delta} by the Vandermonde product.
def schur_polynomial(params, indices, partition):
    n, m = params.n, params.m
    length = len(indices)
    if not length:
        return LaurentPoly.constant(n, m)
    floor = partition[-1]
    shifted = [part - floor + (length - 1 - r) for r, part in enumerate(partition)]
    alternant = LaurentPoly.zero(n, m)
    for permutation in itertools.permutations(range(length)):
        exponent = [0] * params.size
        for r, target in enumerate(permutation):
            exponent[indices[target]] = shifted[r]
        alternant = alternant + LaurentPoly.monomial(
            n, m, exponent, _permutation_sign(permutation)
        )
    quotient = alternant
    for a, b in itertools.combinations(range(length), 2):
        quotient = divide_by_difference(quotient, indices[a], indices[b])
        if quotient is None:
            raise InvalidInput("Alternant not divisible; partition %r" % (partition,))
    scale = [0] * params.size
    for index in indices:
        scale[index] = floor
    return quotient.shift(tuple(scale))


def schur_generator(weight, params):
    weight = check_dominant(weight, params)
    n, m = params.n, params.m
    generator = schur_polynomial(params, list(range(n)), weight[:n]) * schur_polynomial(
        params, list(range(n, params.size)), weight[n:]
    )
    one = LaurentPoly.constant(n, m)
    for i in range(n):
        for j in range(m):
            shift = [0] * params.size
            shift[n + j] = 1
            shift[i] = -1
            factor = one - LaurentPoly.monomial(n, m, shift)
            generator = generator * factor * factor
    return generator
