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

"""The deformed Calogero-Moser-Sutherland integrals.

For i in 0..n+m-1 with parity p(i) = 0 on x-variables and 1 on y-variables:

    d_i^(1) = k^p(i) x_i d/dx_i
    d_i^(p) = d_i^(1) d_i^(p-1)
              - sum_{j != i} k^(1-p(j)) x_i/(x_i - x_j) (d_i^(p-1) - d_j^(p-1))
    L_p     = sum_i k^(-p(i)) d_i^(p)

``strict`` mode keeps every intermediate a Laurent polynomial and raises
DivisionObstruction otherwise; ``localized`` mode works in the ring with
(x_i - x_j) denominators and accepts any input.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from errors import ClosureViolation
from errors import DivisionObstruction
from errors import InvalidInput
from laurent import LaurentPoly
from laurent import LocalizedFn
from laurent import Rational
from laurent import format_rational
from laurent import laurent_divide_exact
from laurent import to_rational
from linalg import exact_matrix

LOGGER = logging.getLogger(__name__)

STRICT = "strict"
LOCALIZED = "localized"
MODES = (STRICT, LOCALIZED)


@dataclass(frozen=True)
class DeformedParams:
    n: int
    m: int
    k: Rational

    def __post_init__(self):
        object.__setattr__(self, "k", to_rational(self.k))
        if self.n < 0 or self.m < 0 or self.n + self.m < 1:
            raise InvalidInput("Need n >= 0, m >= 0 and n + m >= 1, got (%d, %d)" % (self.n, self.m))
        if not self.k:
            raise InvalidInput("The deformation parameter k must be nonzero")

    @property
    def size(self):
        return self.n + self.m

    def parity(self, index):
        return 0 if index < self.n else 1

    def kpow(self, power):
        if power >= 0:
            return self.k ** power
        return (1 / self.k) ** (-power)

    def check_shape(self, f):
        if (f.n, f.m) != (self.n, self.m):
            raise InvalidInput(
                "Function of shape (%d, %d) does not match parameters (%d, %d)"
                % (f.n, f.m, self.n, self.m)
            )

    def to_json(self):
        return {"n": self.n, "m": self.m, "k": format_rational(self.k)}


@dataclass(frozen=True)
class OperatorHandle:
    kind: str
    p: int
    params: DeformedParams
    i: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("partial", "integral"):
            raise InvalidInput("Unknown operator kind %r" % self.kind)
        if self.p < 1:
            raise InvalidInput("Operator order must be at least 1, got %d" % self.p)
        if self.kind == "partial" and not (
            self.i is not None and 0 <= self.i < self.params.size
        ):
            raise InvalidInput("Partial operator index out of range: %r" % (self.i,))

    def apply(self, f, mode=STRICT):
        if self.kind == "partial":
            return apply_partial(self.i, self.p, f, self.params, mode)
        return apply_integral(self.p, f, self.params, mode)


class PartialTable(object):
    """Memo of d_i^(q) f for one input f, keyed by (i, q)."""

    def __init__(self, f, params, mode=STRICT):
        if mode not in MODES:
            raise InvalidInput("Unknown mode %r, expected one of %s" % (mode, ", ".join(MODES)))
        params.check_shape(f)
        if mode == LOCALIZED and isinstance(f, LaurentPoly):
            f = LocalizedFn.from_poly(f)
        if mode == STRICT and isinstance(f, LocalizedFn):
            if not f.is_polynomial():
                raise InvalidInput("Strict mode needs a Laurent polynomial input")
            f = f.num
        self.f = f
        self.params = params
        self.mode = mode
        self._memo = {}

    def _cauchy(self, h, i, j, order):
        if self.mode == LOCALIZED:
            return h.cauchy(i, j)
        quotient = laurent_divide_exact(h, i, j)
        if quotient is None:
            LOGGER.debug("Strict division failed at i=%d j=%d order %d", i, j, order)
            raise DivisionObstruction(i, j, order)
        return quotient

    def partial(self, i, order):
        key = (i, order)
        if key in self._memo:
            return self._memo[key]
        params = self.params
        if order == 1:
            result = self.f.euler(i).scale(params.kpow(params.parity(i)))
        else:
            previous = self.partial(i, order - 1)
            result = previous.euler(i).scale(params.kpow(params.parity(i)))
            for j in range(params.size):
                if j == i:
                    continue
                difference = previous - self.partial(j, order - 1)
                if not difference:
                    continue
                term = self._cauchy(difference, i, j, order)
                result = result - term.scale(params.kpow(1 - params.parity(j)))
        self._memo[key] = result
        return result

    def integral(self, order):
        params = self.params
        total = None
        for i in range(params.size):
            term = self.partial(i, order).scale(params.kpow(-params.parity(i)))
            total = term if total is None else total + term
        return total


def _check_order(order):
    if order < 1:
        raise InvalidInput("Operator order must be at least 1, got %d" % order)


def apply_partial(i, p, f, params, mode=STRICT):
    _check_order(p)
    if not 0 <= i < params.size:
        raise InvalidInput("Variable index %d out of range for %d variables" % (i, params.size))
    return PartialTable(f, params, mode).partial(i, p)


def apply_integral(p, f, params, mode=STRICT):
    _check_order(p)
    return PartialTable(f, params, mode).integral(p)


# L_p f for every requested p, sharing one memo table.
def apply_integrals(orders, f, params, mode=STRICT):
    table = PartialTable(f, params, mode)
    images = {}
    for order in sorted(set(orders)):
        _check_order(order)
        images[order] = table.integral(order)
    return images


# Apply a word L_{p_1} ... L_{p_r}; the rightmost order acts first.
def apply_word(word, f, params, mode=STRICT):
    result = f
    for order in reversed(tuple(word)):
        result = apply_integral(order, result, params, mode)
    return result


# Matrices of L_p (columns are images in basis coordinates) for each p.
def action_matrices(basis, orders, params, mode=STRICT):
    size = len(basis.elements)
    columns = {order: [] for order in orders}
    for position, element in enumerate(basis.elements):
        images = apply_integrals(orders, element, params, mode)
        for order in orders:
            coords = basis.coordinates(images[order])
            if coords is None:
                raise ClosureViolation(
                    "L_%d maps basis element %d outside the span" % (order, position),
                    p=order,
                    element=position,
                )
            columns[order].append(coords)
    matrices = {}
    for order in orders:
        rows = [[columns[order][c][r] for c in range(size)] for r in range(size)]
        matrices[order] = exact_matrix(rows, size)
    LOGGER.debug("Built action matrices for orders %s on %d basis elements", list(orders), size)
    return matrices


def commutator_on_subspace(p, q, basis, params, mode=STRICT):
    matrices = action_matrices(basis, sorted({p, q}), params, mode)
    left, right = matrices[p], matrices[q]
    return left * right - right * left
