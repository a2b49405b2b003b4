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

import sympy
from sympy import igcd
from sympy import ilcm
from sympy.polys.domains import QQ

from errors import InvalidInput
from laurent import ZERO
from laurent import to_rational

LOGGER = logging.getLogger(__name__)

ExactMatrix = sympy.ImmutableMatrix


def to_sympy(value):
    value = to_rational(value)
    return sympy.Rational(int(value.numerator), int(value.denominator))


def from_sympy(value):
    return QQ(int(value.p), int(value.q))


def exact_matrix(rows, cols=None):
    rows = [list(row) for row in rows]
    if cols is None:
        cols = len(rows[0]) if rows else 0
    if not rows:
        return ExactMatrix(sympy.zeros(0, cols))
    for row in rows:
        if len(row) != cols:
            raise InvalidInput("Ragged matrix rows: expected %d columns" % cols)
    return ExactMatrix([[to_sympy(entry) for entry in row] for row in rows])


def matrix_rows(matrix):
    return [
        [from_sympy(matrix[r, c]) for c in range(matrix.cols)]
        for r in range(matrix.rows)
    ]


def identity(size):
    return ExactMatrix(sympy.eye(size))


def is_zero_matrix(matrix):
    return all(entry == 0 for entry in matrix)


def stack(matrices, cols):
    blocks = [matrix for matrix in matrices if matrix.rows]
    if not blocks:
        return ExactMatrix(sympy.zeros(0, cols))
    return ExactMatrix(sympy.Matrix.vstack(*blocks))


# Scale to integer entries with content 1 and a positive first nonzero entry.
def integer_scaled(vector):
    vector = [to_rational(entry) for entry in vector]
    nonzero = [entry for entry in vector if entry]
    if not nonzero:
        return tuple(0 for _ in vector)
    denominator = 1
    for entry in nonzero:
        denominator = int(ilcm(denominator, int(entry.denominator)))
    integers = [
        int(entry.numerator) * (denominator // int(entry.denominator)) for entry in vector
    ]
    content = 0
    for entry in integers:
        content = int(igcd(content, entry))
    sign = 1 if nonzero[0] > 0 else -1
    return tuple(sign * entry // content for entry in integers)


# Basis of {v : Mv = 0}, one vector per free column of the reduced row
# echelon form, in increasing free-column order.
def nullspace(matrix):
    cols = matrix.cols
    if matrix.rows == 0:
        return [integer_scaled([1 if c == f else 0 for c in range(cols)]) for f in range(cols)]
    reduced, pivots = matrix.rref()
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for column in free:
        vector = [ZERO] * cols
        vector[column] = QQ(1)
        for row, pivot in enumerate(pivots):
            vector[pivot] = -from_sympy(reduced[row, column])
        basis.append(integer_scaled(vector))
    return basis


# Reduced row echelon basis of the span of the given vectors, each row
# scaled to integers. Returns (rows, pivot columns).
def echelon_basis(vectors, cols):
    if not vectors:
        return [], ()
    reduced, pivots = exact_matrix(vectors, cols).rref()
    rows = [
        integer_scaled([from_sympy(reduced[r, c]) for c in range(cols)])
        for r in range(len(pivots))
    ]
    return rows, tuple(pivots)


def rank(matrix):
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return len(matrix.rref()[1])


class SpanSolver(object):
    """Coordinates of sparse vectors (key -> rational mappings) over a fixed
    linearly independent family."""

    def __init__(self, vectors):
        self.vectors = [dict(vector) for vector in vectors]
        self.keys = sorted({key for vector in self.vectors for key in vector})
        size = len(self.vectors)
        if not size:
            self.pivot_keys = []
            self._inverse = []
            return
        index = {key: position for position, key in enumerate(self.keys)}
        rows = []
        for vector in self.vectors:
            row = [ZERO] * len(self.keys)
            for key, value in vector.items():
                row[index[key]] = value
            rows.append(row)
        matrix = exact_matrix(rows, len(self.keys))
        pivots = matrix.rref()[1]
        if len(pivots) != size:
            raise InvalidInput(
                "Spanning family is linearly dependent (rank %d of %d)"
                % (len(pivots), size)
            )
        self.pivot_keys = [self.keys[column] for column in pivots]
        square = matrix.extract(list(range(size)), list(pivots)).T
        self._inverse = matrix_rows(square.inv())
        LOGGER.debug("Span solver ready: %d vectors over %d keys", size, len(self.keys))

    def __len__(self):
        return len(self.vectors)

    # Returns the coordinate list, or None when target lies outside the span.
    def coordinates(self, target):
        target = {key: value for key, value in dict(target).items() if value}
        if not self.vectors:
            return [] if not target else None
        values = [target.get(key, ZERO) for key in self.pivot_keys]
        coords = [sum((row[c] * values[c] for c in range(len(values))), ZERO) for row in self._inverse]
        rebuilt = {}
        for coefficient, vector in zip(coords, self.vectors):
            if not coefficient:
                continue
            for key, value in vector.items():
                rebuilt[key] = rebuilt.get(key, ZERO) + coefficient * value
        rebuilt = {key: value for key, value in rebuilt.items() if value}
        if rebuilt != target:
            return None
        return coords
