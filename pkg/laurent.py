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

"""Exact Laurent polynomials in x_1..x_n, y_1..y_m and their localization at
the pairwise differences (x_i - x_j).

Variables are addressed by a single 0-based index: 0..n-1 are the x's and
n..n+m-1 are the y's. Coefficients are elements of sympy's rational field
``QQ`` (gmpy2 ``mpq`` when gmpy2 is installed).
"""

import logging

import sympy
from sympy.polys.domains import QQ

from errors import InvalidInput

LOGGER = logging.getLogger(__name__)

Rational = QQ.dtype
ZERO = QQ(0)
ONE = QQ(1)


def to_rational(value):
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool):
        raise InvalidInput("Booleans are not rationals: %r" % value)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, sympy.Rational):
        return QQ(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    raise InvalidInput("Cannot read %r as an exact rational" % (value,))


# Accepts "p/q", "p" and surrounding whitespace.
def parse_rational(text):
    body = text.strip()
    try:
        if "/" in body:
            num, den = body.split("/", 1)
            num, den = int(num), int(den)
        else:
            num, den = int(body), 1
    except ValueError:
        raise InvalidInput("Not a rational: %r" % text)
    if den == 0:
        raise InvalidInput("Zero denominator in %r" % text)
    return QQ(num, den)


def format_rational(value):
    value = to_rational(value)
    return "%d/%d" % (int(value.numerator), int(value.denominator))


def unit_vector(size, index, scale=1):
    entries = [0] * size
    entries[index] = scale
    return tuple(entries)


def add_exponents(left, right):
    return tuple(a + b for a, b in zip(left, right))


class LaurentPoly(object):
    __slots__ = ("n", "m", "_terms", "_hash")

    def __init__(self, n, m, terms=None):
        self.n = n
        self.m = m
        cleaned = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != n + m:
                raise InvalidInput(
                    "Exponent %r does not fit shape (%d, %d)" % (exponent, n, m)
                )
            coefficient = to_rational(coefficient)
            if coefficient:
                cleaned[exponent] = coefficient
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _raw(cls, n, m, terms):
        poly = cls.__new__(cls)
        poly.n = n
        poly.m = m
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, n, m):
        return cls._raw(n, m, {})

    @classmethod
    def constant(cls, n, m, value=1):
        return cls(n, m, {(0,) * (n + m): value})

    @classmethod
    def monomial(cls, n, m, exponent, coefficient=1):
        return cls(n, m, {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, n, m, index, power=1):
        return cls.monomial(n, m, unit_vector(n + m, index, power))

    @property
    def nvars(self):
        return self.n + self.m

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def exponents(self):
        return sorted(self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items())

    def coefficient(self, exponent):
        return self._terms.get(tuple(exponent), ZERO)

    def degrees(self):
        return {sum(exponent) for exponent in self._terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.m, frozenset(self._terms.items())))
        return self._hash

    def _check_shape(self, other):
        if (self.n, self.m) != (other.n, other.m):
            raise InvalidInput(
                "Shape mismatch: (%d, %d) against (%d, %d)"
                % (self.n, self.m, other.n, other.m)
            )

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_shape(other)
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            total = terms.get(exponent, ZERO) + coefficient
            if total:
                terms[exponent] = total
            else:
                terms.pop(exponent, None)
        return LaurentPoly._raw(self.n, self.m, terms)

    def __neg__(self):
        return LaurentPoly._raw(
            self.n, self.m, {e: -c for e, c in self._terms.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor):
        factor = to_rational(factor)
        if not factor:
            return LaurentPoly.zero(self.n, self.m)
        return LaurentPoly._raw(
            self.n, self.m, {e: c * factor for e, c in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, LocalizedFn):
            return NotImplemented
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check_shape(other)
        terms = {}
        for left_exp, left_coef in self._terms.items():
            for right_exp, right_coef in other._terms.items():
                exponent = add_exponents(left_exp, right_exp)
                terms[exponent] = terms.get(exponent, ZERO) + left_coef * right_coef
        return LaurentPoly._raw(self.n, self.m, {e: c for e, c in terms.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, power):
        if power < 0:
            raise InvalidInput("Negative powers are only defined for monomials")
        result = LaurentPoly.constant(self.n, self.m)
        for _ in range(power):
            result = result * self
        return result

    # Multiplication by the monomial x^shift.
    def shift(self, shift):
        return LaurentPoly._raw(
            self.n,
            self.m,
            {add_exponents(e, shift): c for e, c in self._terms.items()},
        )

    # Euler operator x_i d/dx_i.
    def euler(self, index):
        return LaurentPoly._raw(
            self.n,
            self.m,
            {e: c * e[index] for e, c in self._terms.items() if e[index]},
        )

    # Variable r of the result is variable permutation[r] of self.
    def permute(self, permutation):
        inverse = [0] * len(permutation)
        for target, source in enumerate(permutation):
            inverse[source] = target
        terms = {}
        for exponent, coefficient in self._terms.items():
            moved = [0] * len(exponent)
            for source, power in enumerate(exponent):
                moved[inverse[source]] = power
            terms[tuple(moved)] = coefficient
        return LaurentPoly._raw(self.n, self.m, terms)

    def transpose(self, i, j):
        permutation = list(range(self.nvars))
        permutation[i], permutation[j] = permutation[j], permutation[i]
        return self.permute(permutation)

    def is_symmetric(self):
        for block_start, block_end in ((0, self.n), (self.n, self.nvars)):
            for i in range(block_start, block_end - 1):
                if self.transpose(i, i + 1) != self:
                    return False
        return True

    def variable_name(self, index):
        if index < self.n:
            return "x%d" % (index + 1)
        return "y%d" % (index - self.n + 1)

    def to_text(self):
        if not self._terms:
            return "0"
        pieces = []
        for exponent, coefficient in sorted(self._terms.items(), reverse=True):
            factors = []
            for index, power in enumerate(exponent):
                if power == 1:
                    factors.append(self.variable_name(index))
                elif power:
                    factors.append("%s^%d" % (self.variable_name(index), power))
            monomial = "*".join(factors)
            if not monomial:
                pieces.append(format_rational(coefficient))
            elif coefficient == 1:
                pieces.append(monomial)
            else:
                pieces.append("(%s)*%s" % (format_rational(coefficient), monomial))
        return " + ".join(pieces)

    def __repr__(self):
        return "LaurentPoly(%d, %d, %s)" % (self.n, self.m, self.to_text())

    def to_json(self):
        return {
            "n": self.n,
            "m": self.m,
            "terms": [
                {"exp": list(exponent), "coef": format_rational(coefficient)}
                for exponent, coefficient in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        try:
            n, m = int(data["n"]), int(data["m"])
            terms = {}
            for term in data["terms"]:
                exponent = tuple(int(e) for e in term["exp"])
                terms[exponent] = terms.get(exponent, ZERO) + to_rational(
                    str(term["coef"])
                )
        except (KeyError, TypeError) as exc:
            raise InvalidInput("Malformed Laurent polynomial JSON: %s" % exc)
        return cls(n, m, terms)


def monomial_difference(n, m, i, j):
    return LaurentPoly.variable(n, m, i) - LaurentPoly.variable(n, m, j)


# Returns g with f * x_i = g * (x_i - x_j), i.e. f = g * (1 - x_j / x_i),
# or None when no Laurent polynomial g exists. The factor (1 - x_j/x_i)
# moves exponents along e_j - e_i, so f splits into independent chains and
# g is the running sum of f along each chain; a nonzero chain total means
# a remainder.
def laurent_divide_exact(f, i, j):
    if i == j:
        raise InvalidInput("Division needs two distinct variables, got %d twice" % i)
    chains = {}
    for exponent, coefficient in f.items():
        key = list(exponent)
        key[i] += key[j]
        key[j] = 0
        chains.setdefault(tuple(key), {})[exponent[j]] = coefficient
    quotient = {}
    for key, chain in chains.items():
        low, high = min(chain), max(chain)
        running = ZERO
        for position in range(low, high + 1):
            running += chain.get(position, ZERO)
            if position == high:
                if running:
                    return None
                break
            if running:
                exponent = list(key)
                exponent[j] = position
                exponent[i] = key[i] - position
                quotient[tuple(exponent)] = running
    return LaurentPoly._raw(f.n, f.m, quotient)


# Exact division by (x_i - x_j) itself.
def divide_by_difference(f, i, j):
    quotient = laurent_divide_exact(f, i, j)
    if quotient is None:
        return None
    return quotient.shift(unit_vector(f.nvars, i, -1))


# Restriction to the hyperplane x_i = x_j: variable j is folded into i.
def substitute_equal(f, i, j):
    if i == j:
        raise InvalidInput("Substitution needs two distinct variables, got %d twice" % i)
    terms = {}
    for exponent, coefficient in f.items():
        folded = list(exponent)
        folded[i] += folded[j]
        folded[j] = 0
        folded = tuple(folded)
        total = terms.get(folded, ZERO) + coefficient
        if total:
            terms[folded] = total
        else:
            terms.pop(folded, None)
    return LaurentPoly._raw(f.n, f.m, terms)


def _pair(i, j):
    return (i, j) if i < j else (j, i)


class LocalizedFn(object):
    """num / prod (x_i - x_j)^e over pairs i < j, kept reduced: no factor of
    the denominator divides the numerator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        self.num = num
        cleaned = {}
        for (i, j), power in (den or {}).items():
            if power < 0:
                raise InvalidInput("Negative denominator power for pair (%d, %d)" % (i, j))
            if i >= j:
                raise InvalidInput("Denominator pairs must satisfy i < j, got (%d, %d)" % (i, j))
            if power:
                cleaned[(i, j)] = power
        self.den = cleaned
        if reduce:
            self._reduce()

    @classmethod
    def from_poly(cls, poly):
        return cls(poly, {}, reduce=False)

    @property
    def n(self):
        return self.num.n

    @property
    def m(self):
        return self.num.m

    @property
    def nvars(self):
        return self.num.nvars

    def _reduce(self):
        if not self.num:
            self.den = {}
            return
        for pair in sorted(self.den):
            while self.den.get(pair):
                quotient = divide_by_difference(self.num, pair[0], pair[1])
                if quotient is None:
                    break
                self.num = quotient
                self.den[pair] -= 1
        self.den = {pair: power for pair, power in self.den.items() if power}

    def is_polynomial(self):
        return not self.den

    def as_poly(self):
        if self.den:
            return None
        return self.num

    def __bool__(self):
        return bool(self.num)

    def _factor(self, pair):
        return monomial_difference(self.n, self.m, pair[0], pair[1])

    def _expanded_numerator(self, target_den):
        num = self.num
        for pair, power in target_den.items():
            extra = power - self.den.get(pair, 0)
            if extra:
                num = num * (self._factor(pair) ** extra)
        return num

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = LocalizedFn.from_poly(other)
        if not isinstance(other, LocalizedFn):
            return NotImplemented
        target = dict(self.den)
        for pair, power in other.den.items():
            target[pair] = max(power, target.get(pair, 0))
        num = self._expanded_numerator(target) + other._expanded_numerator(target)
        return LocalizedFn(num, target)

    def __neg__(self):
        return LocalizedFn(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        if isinstance(other, LaurentPoly):
            other = LocalizedFn.from_poly(other)
        if not isinstance(other, LocalizedFn):
            return NotImplemented
        return self + (-other)

    def scale(self, factor):
        scaled = self.num.scale(factor)
        return LocalizedFn(scaled, self.den, reduce=not scaled)

    def __mul__(self, other):
        if isinstance(other, LocalizedFn):
            den = dict(self.den)
            for pair, power in other.den.items():
                den[pair] = den.get(pair, 0) + power
            return LocalizedFn(self.num * other.num, den)
        if isinstance(other, LaurentPoly):
            return LocalizedFn(self.num * other, self.den)
        return self.scale(other)

    __rmul__ = __mul__

    def shift(self, shift):
        return LocalizedFn(self.num.shift(shift), self.den, reduce=False)

    # Multiplication by x_i / (x_i - x_j).
    def cauchy(self, i, j):
        pair = _pair(i, j)
        sign = 1 if i < j else -1
        den = dict(self.den)
        den[pair] = den.get(pair, 0) + 1
        num = self.num.shift(unit_vector(self.nvars, i)).scale(sign)
        return LocalizedFn(num, den)

    # x_i d/dx_i by the quotient rule; every factor containing x_i gains one
    # power in the denominator before reduction.
    def euler(self, index):
        involved = sorted(pair for pair in self.den if index in pair)
        if not involved:
            return LocalizedFn(self.num.euler(index), self.den, reduce=False)
        x_i = LaurentPoly.variable(self.n, self.m, index)
        product = LaurentPoly.constant(self.n, self.m)
        for pair in involved:
            product = product * self._factor(pair)
        num = self.num.euler(index) * product
        for pair in involved:
            sign = 1 if pair[0] == index else -1
            others = LaurentPoly.constant(self.n, self.m)
            for other in involved:
                if other != pair:
                    others = others * self._factor(other)
            num = num - (self.num * others * x_i).scale(sign * self.den[pair])
        den = dict(self.den)
        for pair in involved:
            den[pair] += 1
        return LocalizedFn(num, den)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = LocalizedFn.from_poly(other)
        if not isinstance(other, LocalizedFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.num, frozenset(self.den.items())))

    def to_text(self):
        if not self.den:
            return self.num.to_text()
        factors = []
        for (i, j), power in sorted(self.den.items()):
            factor = "(%s - %s)" % (self.num.variable_name(i), self.num.variable_name(j))
            factors.append(factor if power == 1 else "%s^%d" % (factor, power))
        return "(%s) / %s" % (self.num.to_text(), "*".join(factors))

    def __repr__(self):
        return "LocalizedFn(%s)" % self.to_text()

    def to_json(self):
        return {
            "num": self.num.to_json(),
            "den": [[i, j, power] for (i, j), power in sorted(self.den.items())],
        }

    @classmethod
    def from_json(cls, data):
        try:
            num = LaurentPoly.from_json(data["num"])
            den = {(int(i), int(j)): int(power) for i, j, power in data.get("den", [])}
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput("Malformed localized function JSON: %s" % exc)
        return cls(num, den)


def function_from_json(data):
    if isinstance(data, dict) and "num" in data:
        return LocalizedFn.from_json(data)
    return LaurentPoly.from_json(data)
