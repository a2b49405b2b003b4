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


import unittest

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from errors import InvalidInput
from hull import hull_lattice_points
from hull import in_convex_hull

TRIANGLE = [(0, 0), (2, 0), (0, 2)]


class TestHull(unittest.TestCase):
    def test_in_convex_hull(self):
        self.assertTrue(in_convex_hull(TRIANGLE, (1, 1)))
        self.assertTrue(in_convex_hull(TRIANGLE, (0, 0)))
        self.assertFalse(in_convex_hull(TRIANGLE, (2, 2)))
        self.assertFalse(in_convex_hull(TRIANGLE, (-1, 0)))

    def test_triangle_lattice_points(self):
        self.assertEqual(
            hull_lattice_points(TRIANGLE),
            {(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)},
        )

    def test_predicate_filters_candidates(self):
        points = hull_lattice_points(TRIANGLE, predicate=lambda p: sum(p) == 2)
        self.assertEqual(points, {(2, 0), (1, 1), (0, 2)})

    def test_segment_in_higher_dimension(self):
        points = hull_lattice_points([(1, -1, 0), (-1, 1, 0)])
        self.assertEqual(points, {(1, -1, 0), (0, 0, 0), (-1, 1, 0)})

    def test_box(self):
        square = [(0, 0), (0, 2), (2, 0), (2, 2)]
        points = hull_lattice_points(square)
        self.assertEqual(len(points), 9)
        self.assertEqual(hull_lattice_points(points), points)

    def test_single_point(self):
        self.assertEqual(hull_lattice_points([(3, -2)]), {(3, -2)})

    def test_empty(self):
        with self.assertRaises(InvalidInput):
            hull_lattice_points([])


points = st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=1, max_size=4)


class TestHullClosure(unittest.TestCase):
    @settings(max_examples=40, deadline=None)
    @given(points)
    def test_idempotent(self, seed):
        hull = hull_lattice_points(seed)
        self.assertTrue(set(seed) <= hull)
        self.assertEqual(hull_lattice_points(hull), hull)

    @settings(max_examples=40, deadline=None)
    @given(points, points)
    def test_monotone(self, seed, extra):
        self.assertTrue(hull_lattice_points(seed) <= hull_lattice_points(seed + extra))
