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

"""Weight combinatorics for gl(n, 2m) highest weights of the spherical pair.

An admissible weight has length n + 2m: even x-entries, then m equal pairs.
Its (A, B) encoding is a_i = l_i + 1 - i, b_j = -l_{n+2j} - n + 2j (1-based
i, j); every move on classes is a move on the maximal integer segments of
C = B u (B - 1).
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Tuple

from sympy.polys.domains import QQ

from cms import DeformedParams
from errors import EnumerationInvalid
from errors import InfiniteClass
from errors import InvalidInput
from errors import InvalidWeight
from errors import NotReduced
from errors import NotTypical
from harish_chandra import form_diagonal
from harish_chandra import rho_k
from laurent import ZERO

LOGGER = logging.getLogger(__name__)

SYMMETRIC_K = QQ(-1, 2)


def dominance_key(weight):
    return tuple(itertools.accumulate(weight))


def dominance_leq(lower, upper):
    if len(lower) != len(upper):
        raise InvalidInput("Dominance compares equal lengths, got %d and %d" % (len(lower), len(upper)))
    return all(a <= b for a, b in zip(dominance_key(lower), dominance_key(upper)))


@dataclass(frozen=True)
class ABPair:
    A: Tuple
    B: Tuple

    def __post_init__(self):
        a_values = tuple(sorted((int(a) for a in self.A), reverse=True))
        b_values = tuple(sorted((int(b) for b in self.B), reverse=True))
        if len(set(a_values)) != len(a_values) or len(set(b_values)) != len(b_values):
            raise InvalidWeight("A and B must not repeat elements: %r, %r" % (self.A, self.B))
        for upper, lower in zip(a_values, a_values[1:]):
            if (upper - lower) % 2 == 0:
                raise InvalidWeight("Neighbouring elements %d, %d of A differ by an even number" % (upper, lower))
        if set(b_values) & {b - 1 for b in b_values}:
            raise InvalidWeight("B meets B - 1 in %r" % (b_values,))
        object.__setattr__(self, "A", a_values)
        object.__setattr__(self, "B", b_values)

    @property
    def n(self):
        return len(self.A)

    @property
    def m(self):
        return len(self.B)

    def to_json(self):
        return {"A": list(self.A), "B": list(self.B)}


def check_admissible(weight, n, m, dominant=True):
    weight = tuple(int(e) for e in weight)
    if len(weight) != n + 2 * m:
        raise InvalidWeight("Admissible weight needs length %d, got %d" % (n + 2 * m, len(weight)))
    x_part = weight[:n]
    pairs = weight[n:]
    if any(e % 2 for e in x_part):
        raise InvalidWeight("First %d entries must be even: %r" % (n, weight))
    if any(pairs[2 * j] != pairs[2 * j + 1] for j in range(m)):
        raise InvalidWeight("Entries after %d must come in equal pairs: %r" % (n, weight))
    if dominant:
        if any(a < b for a, b in zip(x_part, x_part[1:])) or any(
            a < b for a, b in zip(pairs, pairs[1:])
        ):
            raise InvalidWeight("Weight %r is not dominant" % (weight,))
    return weight


def sharp(weight, n, m):
    weight = check_admissible(weight, n, m, dominant=False)
    return tuple(e // 2 for e in weight[:n]) + tuple(weight[n + 2 * j] for j in range(m))


def sharp_inverse(weight, n, m):
    weight = tuple(int(e) for e in weight)
    if len(weight) != n + m:
        raise InvalidWeight("Weight needs length %d, got %d" % (n + m, len(weight)))
    doubled = tuple(2 * e for e in weight[:n])
    for e in weight[n:]:
        doubled += (e, e)
    return doubled


def to_ab(weight, n, m):
    weight = check_admissible(weight, n, m)
    A = [weight[i - 1] + 1 - i for i in range(1, n + 1)]
    B = [-weight[n + 2 * j - 1] - n + 2 * j for j in range(1, m + 1)]
    return ABPair(tuple(A), tuple(B))


# Weight-like vector of any pair; coincides with from_ab on the image.
def raw_weight(pair):
    n = pair.n
    weight = [a - 1 + i for i, a in enumerate(pair.A, start=1)]
    for j, b in enumerate(sorted(pair.B), start=1):
        value = -b - n + 2 * j
        weight += [value, value]
    return tuple(weight)


# Pairs coming from admissible weights additionally have all l_i even,
# i.e. a_n of the parity of n + 1.
def in_image(pair):
    try:
        check_admissible(raw_weight(pair), pair.n, pair.m)
    except InvalidWeight:
        return False
    return True


def from_ab(pair):
    weight = raw_weight(pair)
    try:
        return check_admissible(weight, pair.n, pair.m)
    except InvalidWeight as exc:
        raise InvalidWeight("Pair %r is not the image of an admissible weight: %s" % (pair, exc.message))


def _c_set(pair):
    return set(pair.B) | {b - 1 for b in pair.B}


def segments(B):
    points = sorted(set(B) | {b - 1 for b in B})
    result = []
    for point in points:
        if result and result[-1][1] == point - 1:
            result[-1][1] = point
        else:
            result.append([point, point])
    return [tuple(segment) for segment in result]


def equivalent(left, right):
    if (left.n, left.m) != (right.n, right.m):
        raise InvalidInput("Pairs of different shapes cannot be compared")
    left_c, right_c = _c_set(left), _c_set(right)
    left_a, right_a = set(left.A), set(right.A)
    return left_a - left_c == right_a - right_c and left_c - left_a == right_c - right_a


def atypicality_degree(pair):
    if set(pair.A) & set(pair.B):
        raise NotReduced("A and B intersect in %r" % sorted(set(pair.A) & set(pair.B)))
    return len(set(pair.A) & {b - 1 for b in pair.B})


def _segment_of(point, segment_list):
    for low, high in segment_list:
        if low <= point <= high:
            return low, high
    return None


# Walks down to the least member of the class while A meets B. A smaller
# element of A inside the same segment means the class is infinite.
def least_representative(pair):
    current = pair
    while set(current.A) & set(current.B):
        a = max(set(current.A) & set(current.B))
        low, _ = _segment_of(a, segments(current.B))
        if any(low <= other < a for other in current.A):
            raise InfiniteClass(
                "Class of %r is infinite: segment starting at %d holds two elements of A"
                % (pair.to_json(), low),
                pair=pair.to_json(),
            )
        new_a = [other for other in current.A if other != a] + [low - 1]
        new_b = [b - 1 if low <= b <= a else b for b in current.B]
        try:
            reduced = ABPair(tuple(new_a), tuple(new_b))
        except InvalidWeight as exc:
            raise EnumerationInvalid("Reduction left the pair set: %s" % exc.message)
        if not equivalent(current, reduced):
            raise EnumerationInvalid("Reduction changed the class of %r" % (current.to_json(),))
        LOGGER.debug("Reduced %r to %r", current, reduced)
        current = reduced
    return current


def _upper_alternating(low, high):
    return list(range(low + 1, high + 1, 2))


def enumerate_class(pair):
    least = least_representative(pair)
    a_set = set(least.A)
    segment_list = segments(least.B)
    movable = []
    for low, high in segment_list:
        inside = sorted(a for a in a_set if low <= a <= high)
        if len(inside) > 1:
            raise EnumerationInvalid("Segment [%d, %d] holds several elements of A" % (low, high))
        movable.append(inside[0] if inside else None)
    choices = [index for index, a in enumerate(movable) if a is not None]
    members = []
    for flags in itertools.product((False, True), repeat=len(choices)):
        split = {index for index, flag in zip(choices, flags) if flag}
        new_a = set(a_set)
        new_b = []
        for index, (low, high) in enumerate(segment_list):
            if index in split:
                a = movable[index]
                new_a.discard(a)
                new_a.add(high + 1)
                new_b += _upper_alternating(low, a - 1) + _upper_alternating(a + 1, high + 1)
            else:
                new_b += _upper_alternating(low, high)
        try:
            member = ABPair(tuple(new_a), tuple(new_b))
        except InvalidWeight as exc:
            raise EnumerationInvalid("Split choice %r leaves the pair set: %s" % (sorted(split), exc.message))
        if not equivalent(least, member):
            raise EnumerationInvalid("Split choice %r is not equivalent to the input" % sorted(split))
        members.append(member)
    if len(set(members)) != 2 ** len(choices):
        raise EnumerationInvalid("Expected %d distinct members, got %d" % (2 ** len(choices), len(set(members))))
    members.sort(key=lambda member: dominance_key(raw_weight(member)))
    base = raw_weight(least)
    if members[0] != least or not all(dominance_leq(base, raw_weight(other)) for other in members):
        raise EnumerationInvalid("Input is not the least member of its class")
    return members


# Dominant admissible weights with entries in [low, high]; with a centre,
# each entry also stays within radius of the matching centre entry.
def dominant_admissible_weights(n, m, low, high, centre=None, radius=0):
    def bounds(index):
        if centre is None:
            return low, high
        return max(low, centre[index] - radius), min(high, centre[index] + radius)

    def walk_y(prefix, j, upper):
        if j == m:
            yield prefix
            return
        lo, hi = bounds(n + 2 * j)
        for value in range(min(hi, upper), lo - 1, -1):
            yield from walk_y(prefix + (value, value), j + 1, value)

    def walk_x(prefix, position, upper):
        if position == n:
            yield from walk_y(prefix, 0, high)
            return
        lo, hi = bounds(position)
        top = min(hi, upper)
        start = top if top % 2 == 0 else top - 1
        for value in range(start, lo - 1, -2):
            yield from walk_x(prefix + (value,), position + 1, value)

    yield from walk_x((), 0, high)


# Exhaustive oracle: dominant admissible weights within radius of weight in
# every coordinate that are equivalent to it.
def class_by_search(weight, n, m, radius):
    weight = check_admissible(weight, n, m)
    if radius < 0:
        raise InvalidInput("Search radius must be nonnegative")
    origin = to_ab(weight, n, m)
    low = min(weight) - radius
    high = max(weight) + radius
    found = [
        candidate
        for candidate in dominant_admissible_weights(n, m, low, high, centre=weight, radius=radius)
        if equivalent(origin, to_ab(candidate, n, m))
    ]
    found.sort(key=dominance_key)
    return found


def super_rho(n, m):
    entries = [QQ(n - 2 * m - 2 * i + 1, 2) for i in range(1, n + 1)]
    entries += [QQ(2 * m + n - 2 * j + 1, 2) for j in range(1, 2 * m + 1)]
    return tuple(entries)


# Product over i, j of (l + rho, eps_i - delta_2j) with (eps, eps) = 1 and
# (delta, delta) = -1.
def star_product(weight, n, m):
    weight = check_admissible(weight, n, m)
    shifted = [value + rho for value, rho in zip(weight, super_rho(n, m))]
    product = QQ(1)
    for i in range(n):
        for j in range(m):
            product *= shifted[i] + shifted[n + 2 * j + 1]
    return product


def is_spherically_typical(weight, n, m):
    return star_product(weight, n, m) != 0


# Product over the restricted positive roots of type A(n-1, m-1) of
# (l# + rho(k), alpha) - (alpha, alpha)/2 at k = -1/2.
def invariant_form_product(weight, n, m):
    weight = check_admissible(weight, n, m)
    params = DeformedParams(n, m, SYMMETRIC_K)
    diagonal = form_diagonal(params)
    shifted = [value + rho for value, rho in zip(sharp(weight, n, m), rho_k(params).entries)]
    product = QQ(1)
    for a, b in itertools.combinations(range(n + m), 2):
        pairing = shifted[a] * diagonal[a] - shifted[b] * diagonal[b]
        product *= pairing - (diagonal[a] + diagonal[b]) / 2
    return product


def typicality_invariant_form(weight, n, m):
    return invariant_form_product(weight, n, m) != ZERO


# Every weight of the grid where the three typicality tests disagree.
def typicality_disagreements(n, m, bound):
    findings = []
    for weight in dominant_admissible_weights(n, m, -bound, bound):
        pair = to_ab(weight, n, m)
        disjoint = not set(pair.A) & set(pair.B)
        star = is_spherically_typical(weight, n, m)
        invariant = typicality_invariant_form(weight, n, m)
        if not (star == disjoint == invariant):
            findings.append(
                {
                    "weight": list(weight),
                    "star": star,
                    "disjoint": disjoint,
                    "invariant_form": invariant,
                }
            )
    LOGGER.info("Typicality scan (%d, %d) bound %d: %d disagreements", n, m, bound, len(findings))
    return findings


def kac_flag(weight, n, m):
    weight = check_admissible(weight, n, m)
    pair = to_ab(weight, n, m)
    if set(pair.A) & set(pair.B):
        raise NotTypical("Weight %r is not spherically typical" % (weight,), weight=list(weight))
    flag = [(from_ab(member), 1) for member in enumerate_class(pair)]
    if flag[0][0] != weight:
        raise EnumerationInvalid("Kac flag of %r does not start with it" % (weight,))
    return flag


# Moves a_l, ..., a_1 in turn through B from left to right: a passing b
# gives (b, a) when a != b and (b + 1, a + 1) when a == b.
def odd_reflection_F(A, B):
    moved_b = [int(b) for b in B]
    moved_a = [int(a) for a in A]
    for position in range(len(moved_a) - 1, -1, -1):
        a = moved_a[position]
        for index, b in enumerate(moved_b):
            if a == b:
                moved_b[index] = b + 1
                a = a + 1
        moved_a[position] = a
    return tuple(moved_b), tuple(moved_a)
