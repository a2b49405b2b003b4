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

from sympy.polys.domains import QQ

from errors import InvalidInput
from laurent import ZERO
from linalg import exact_matrix
from linalg import nullspace

LOGGER = logging.getLogger(__name__)


# Phase I of the simplex method with Bland's rule: is there t >= 0 with
# sum(t) = 1 and sum(t_k * points[k]) = target?
def in_convex_hull(points, target):
    dimension = len(target)
    count = len(points)
    width = count + dimension + 1
    tableau = []
    for row in range(dimension + 1):
        if row < dimension:
            coefficients = [QQ(point[row]) for point in points]
            rhs = QQ(target[row])
        else:
            coefficients = [QQ(1)] * count
            rhs = QQ(1)
        if rhs < 0:
            coefficients = [-value for value in coefficients]
            rhs = -rhs
        artificial = [QQ(1) if other == row else ZERO for other in range(dimension + 1)]
        tableau.append(coefficients + artificial + [rhs])
    basis = [count + row for row in range(dimension + 1)]

    # Reduced costs of the phase I objective (sum of artificials); the last
    # entry holds minus the objective value.
    cost = [ZERO] * (width + 1)
    for column in range(width + 1):
        if count <= column < width:
            continue
        cost[column] = -sum((row[column] for row in tableau), ZERO)

    while True:
        entering = next((c for c in range(width) if cost[c] < 0), None)
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for position, row in enumerate(tableau):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[position] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = position
        if leaving is None:
            break
        pivot_row = tableau[leaving]
        pivot = pivot_row[entering]
        pivot_row = [value / pivot for value in pivot_row]
        tableau[leaving] = pivot_row
        for position, row in enumerate(tableau):
            if position != leaving and row[entering]:
                factor = row[entering]
                tableau[position] = [a - factor * b for a, b in zip(row, pivot_row)]
        factor = cost[entering]
        cost = [a - factor * b for a, b in zip(cost, pivot_row)]
        basis[leaving] = entering
    return cost[-1] == 0


# Integer normals of the affine hull of points; candidates off the affine
# hull are rejected before any linear program runs.
def _affine_equations(points):
    origin = points[0]
    differences = [[p - o for p, o in zip(point, origin)] for point in points[1:]]
    if not differences:
        return [tuple(1 if r == c else 0 for c in range(len(origin))) for r in range(len(origin))]
    return nullspace(exact_matrix(differences, len(origin)))


def hull_lattice_points(points, predicate=None):
    points = sorted({tuple(int(e) for e in point) for point in points})
    if not points:
        raise InvalidInput("The convex hull of an empty set has no lattice points")
    dimension = len(points[0])
    if any(len(point) != dimension for point in points):
        raise InvalidInput("Hull points must share one length")
    known = set(points)
    origin = points[0]
    equations = _affine_equations(points)
    ranges = [
        range(min(point[r] for point in points), max(point[r] for point in points) + 1)
        for r in range(dimension)
    ]
    result = set()
    tested = 0
    for candidate in itertools.product(*ranges):
        if predicate is not None and not predicate(candidate):
            continue
        if candidate in known:
            result.add(candidate)
            continue
        if any(
            sum(a * (c - o) for a, c, o in zip(normal, candidate, origin))
            for normal in equations
        ):
            continue
        tested += 1
        if in_convex_hull(points, candidate):
            result.add(candidate)
    LOGGER.debug(
        "Hull of %d points: %d lattice points (%d linear programs)",
        len(points),
        len(result),
        tested,
    )
    return result
