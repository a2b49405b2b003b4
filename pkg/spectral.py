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

import logging
from dataclasses import dataclass
from typing import Dict
from typing import Tuple

from cms import STRICT
from cms import action_matrices
from errors import DecompositionGap
from errors import GroupingMismatch
from errors import InvalidInput
from errors import InvalidWeight
from harish_chandra import character
from laurent import format_rational
from linalg import SpanSolver
from linalg import echelon_basis
from linalg import exact_matrix
from linalg import from_sympy
from linalg import identity
from linalg import is_zero_matrix
from linalg import nullspace
from linalg import rank
from linalg import stack
from linalg import to_sympy
from quasi import leading_exponent
from weights import SYMMETRIC_K
from weights import atypicality_degree
from weights import least_representative
from weights import segments
from weights import sharp_inverse
from weights import to_ab

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralBlock:
    character: Dict
    representatives: Tuple
    block_basis: Tuple
    nilpotency: Dict
    eigenspace_dim: int
    elements: Tuple = ()

    @property
    def dimension(self):
        return len(self.block_basis)

    def is_eigenspace(self):
        return all(order == 1 for order in self.nilpotency.values())

    def to_json(self):
        return {
            "character": {str(p): format_rational(value) for p, value in sorted(self.character.items())},
            "reps": [list(e) for e in self.representatives],
            "dim": self.dimension,
            "nilpotency": {str(p): order for p, order in sorted(self.nilpotency.items())},
            "eigenspace_dim": self.eigenspace_dim,
            "basis": [list(vector) for vector in self.block_basis],
            "elements": [element.to_json() for element in self.elements],
        }


def default_pmax(params):
    return 2 * params.size


def action_matrix(basis, p, params, mode=STRICT):
    return action_matrices(basis, [p], params, mode)[p]


# Central-character class of the exponent at k = -1/2, read through the
# sharp bijection: the pair (A - C, C - A) with C = B u (B - 1).
def _class_key(exponent, params):
    pair = to_ab(sharp_inverse(exponent, params.n, params.m), params.n, params.m)
    c_set = {point for low, high in segments(pair.B) for point in range(low, high + 1)}
    return frozenset(set(pair.A) - c_set), frozenset(c_set - set(pair.A))


def _check_combinatorial_grouping(groups, params):
    numeric = {frozenset(reps) for reps in groups.values()}
    combinatorial = {}
    for reps in groups.values():
        for exponent in reps:
            try:
                key = _class_key(exponent, params)
            except InvalidWeight as exc:
                raise GroupingMismatch(
                    "Leading exponent %r has no admissible weight: %s" % (exponent, exc.message),
                    exponent=list(exponent),
                )
            combinatorial.setdefault(key, set()).add(exponent)
    combinatorial = {frozenset(reps) for reps in combinatorial.values()}
    if numeric != combinatorial:
        raise GroupingMismatch(
            "Characters and weight classes group the leading exponents differently",
            numeric=sorted(sorted(list(e) for e in group) for group in numeric),
            combinatorial=sorted(sorted(list(e) for e in group) for group in combinatorial),
        )


# Smallest power (A - c)^N whose kernel no longer grows.
def _stable_power(shifted):
    power = shifted
    nullity = shifted.cols - rank(power)
    while True:
        following = power * shifted
        following_nullity = shifted.cols - rank(following)
        if following_nullity == nullity:
            return power
        power, nullity = following, following_nullity


def _shifted(matrix, value):
    return matrix - identity(matrix.rows) * to_sympy(value)


def _nilpotency_order(matrix):
    power = matrix
    order = 1
    while not is_zero_matrix(power):
        if order > matrix.rows:
            raise DecompositionGap("Restricted operator is not nilpotent on its block")
        power = power * matrix
        order += 1
    return order


def _restrict(matrix, vectors):
    solver = SpanSolver([{r: value for r, value in enumerate(vector) if value} for vector in vectors])
    columns = []
    for vector in vectors:
        image = matrix * exact_matrix([[value] for value in vector], 1)
        coords = solver.coordinates({r: from_sympy(image[r, 0]) for r in range(image.rows)})
        if coords is None:
            return None
        columns.append(coords)
    size = len(vectors)
    return exact_matrix([[columns[c][r] for c in range(size)] for r in range(size)], size)


def decompose(basis, params, pmax=None, mode=STRICT):
    pmax = default_pmax(params) if pmax is None else pmax
    if pmax < 1:
        raise InvalidInput("pmax must be positive, got %d" % pmax)
    dimension = basis.dimension
    if not dimension:
        return []
    orders = list(range(1, pmax + 1))
    matrices = action_matrices(basis, orders, params, mode)

    groups = {}
    for element in basis.elements:
        exponent = leading_exponent(element)
        groups.setdefault(character(exponent, pmax, params), []).append(exponent)
    if params.k == SYMMETRIC_K:
        _check_combinatorial_grouping(groups, params)

    blocks = []
    for values, representatives in groups.items():
        powers = [_stable_power(_shifted(matrices[p], value)) for p, value in zip(orders, values)]
        kernel = nullspace(stack(powers, dimension))
        if len(kernel) != len(representatives):
            raise DecompositionGap(
                "Block of character %s has dimension %d but %d leading exponents"
                % ([format_rational(v) for v in values], len(kernel), len(representatives))
            )
        vectors, _ = echelon_basis(kernel, dimension)
        nilpotency = {}
        for p, value in zip(orders, values):
            restricted = _restrict(matrices[p], vectors)
            if restricted is None:
                raise DecompositionGap("Block is not invariant under L_%d" % p)
            nilpotency[p] = _nilpotency_order(_shifted(restricted, value))
        eigenspace_dim = len(
            nullspace(stack([_shifted(matrices[p], value) for p, value in zip(orders, values)], dimension))
        )
        if not eigenspace_dim:
            raise DecompositionGap("Block holds no joint eigenvector")
        blocks.append(
            SpectralBlock(
                character=dict(zip(orders, values)),
                representatives=tuple(sorted(representatives, reverse=True)),
                block_basis=tuple(tuple(vector) for vector in vectors),
                nilpotency=nilpotency,
                eigenspace_dim=eigenspace_dim,
                elements=tuple(basis.combination(vector) for vector in vectors),
            )
        )

    total = sum(block.dimension for block in blocks)
    spanned = rank(exact_matrix([vector for block in blocks for vector in block.block_basis], dimension))
    if total != dimension or spanned != dimension:
        raise DecompositionGap(
            "Blocks span %d of %d dimensions (sum of block sizes %d)" % (spanned, dimension, total)
        )
    blocks.sort(key=lambda block: block.representatives, reverse=True)
    LOGGER.info("Decomposed %d-dimensional space into %d blocks", dimension, len(blocks))
    return blocks


# 2^s for the class of the weight at k = -1/2; the weight has length n + m
# and is read through the sharp bijection.
def predicted_block_dimension(weight, params):
    if params.k != SYMMETRIC_K:
        raise InvalidInput("Block dimensions are predicted only at k = -1/2")
    pair = least_representative(to_ab(sharp_inverse(weight, params.n, params.m), params.n, params.m))
    return 2 ** atypicality_degree(pair)
