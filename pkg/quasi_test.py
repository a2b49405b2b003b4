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

from sympy.polys.domains import QQ

from cms import DeformedParams
from cms import apply_integral
from errors import InvalidInput
from errors import InvalidWeight
from laurent import LaurentPoly
from quasi import echelon_key
from quasi import invariant_subspace_basis
from quasi import is_dominant
from quasi import is_quasi_invariant
from quasi import leading_exponent
from quasi import max_exponents
from quasi import orbit_sum
from quasi import schur_generator
from quasi import schur_polynomial
from quasi import symmetric_orbit

PARAMS = DeformedParams(1, 1, QQ(-1, 2))
X = LaurentPoly.variable(1, 1, 0)
Y = LaurentPoly.variable(1, 1, 1)
ONE = LaurentPoly.constant(1, 1)
PHI_2_0 = X * X - (X * Y).scale(QQ(4, 3))
PSI_0 = LaurentPoly(1, 1, {(1, -1): 1, (-1, 1): 1})


class TestOrders(unittest.TestCase):
    def test_is_dominant(self):
        self.assertTrue(is_dominant((3, 1, 2, 2), 2))
        self.assertFalse(is_dominant((1, 3, 2, 2), 2))
        self.assertFalse(is_dominant((3, 1, 1, 2), 2))

    def test_echelon_key_orders_by_weighted_sum(self):
        self.assertGreater(echelon_key((1, -1)), echelon_key((0, 0)))
        self.assertGreater(echelon_key((0, 0)), echelon_key((-1, 1)))

    def test_leading_exponent(self):
        self.assertEqual(leading_exponent(PSI_0), (1, -1))
        self.assertEqual(leading_exponent(PHI_2_0), (2, 0))
        with self.assertRaises(InvalidInput):
            leading_exponent(LaurentPoly.zero(1, 1))

    def test_max_exponents(self):
        f = LaurentPoly(1, 1, {(2, 0): 1, (1, 1): 1, (0, 0): 1})
        self.assertEqual(max_exponents(f), {(2, 0)})

    def test_max_exponents_of_sums(self):
        self.assertEqual(max_exponents(LaurentPoly(1, 1, {(2, 1): 1, (0, 3): 1})), {(2, 1)})
        self.assertEqual(max_exponents(X + Y), {(1, 0)})
        self.assertEqual(max_exponents(PSI_0), {(1, -1)})

    def test_symmetric_orbit(self):
        self.assertEqual(set(symmetric_orbit((1, 0, 5), 2)), {(1, 0, 5), (0, 1, 5)})
        self.assertEqual(symmetric_orbit((2, 2, 1), 2), [(2, 2, 1)])
        params = DeformedParams(1, 2, 1)
        self.assertEqual(len(orbit_sum((0, 1, 0), params)), 2)


class TestQuasiInvariance(unittest.TestCase):
    def test_eigenfunctions_are_quasi_invariant(self):
        self.assertTrue(is_quasi_invariant(PHI_2_0, PARAMS))
        self.assertTrue(is_quasi_invariant(PSI_0, PARAMS))
        self.assertTrue(is_quasi_invariant(ONE, PARAMS))

    def test_hyperplane_witness(self):
        report = is_quasi_invariant(X, PARAMS)
        self.assertFalse(report)
        self.assertEqual(report.witness, ("hyperplane", 0, 0))

    def test_transposition_witness(self):
        params = DeformedParams(2, 0, 1)
        report = is_quasi_invariant(LaurentPoly.variable(2, 0, 0), params)
        self.assertEqual(report.witness, ("transposition", 0, 1))


class TestInvariantSubspace(unittest.TestCase):
    def test_jordan_pair_subspace(self):
        basis = invariant_subspace_basis(PSI_0.exponents(), PARAMS)
        self.assertEqual(basis.dimension, 2)
        self.assertEqual([leading_exponent(e) for e in basis.elements], [(1, -1), (0, 0)])
        self.assertEqual(basis.support, ((-1, 1), (0, 0), (1, -1)))

    def test_eigenfunction_subspace(self):
        basis = invariant_subspace_basis(PHI_2_0.exponents(), PARAMS)
        self.assertEqual(basis.dimension, 1)
        self.assertEqual(basis.elements[0], (X * X).scale(3) - (X * Y).scale(4))

    def test_coordinates_and_combination(self):
        basis = invariant_subspace_basis(PSI_0.exponents(), PARAMS)
        target = PSI_0.scale(3) - ONE
        coords = basis.coordinates(target)
        self.assertEqual(coords, [3, -1])
        self.assertEqual(basis.combination(coords), target)
        self.assertIsNone(basis.coordinates(X * Y))

    def test_degree_restriction(self):
        seed = [(2, 0), (0, 2)]
        basis = invariant_subspace_basis(seed, PARAMS, degree=2)
        self.assertTrue(all(sum(e) == 2 for e in basis.support))
        for element in basis.elements:
            self.assertTrue(is_quasi_invariant(element, PARAMS))

    def test_subspace_is_closed(self):
        basis = invariant_subspace_basis([(2, -1), (-1, 2)], PARAMS)
        for element in basis.elements:
            for order in (2, 3):
                image = apply_integral(order, element, PARAMS)
                self.assertIsNotNone(basis.coordinates(image))

    def test_constant_seed(self):
        basis = invariant_subspace_basis([(0, 0)], PARAMS)
        self.assertEqual(basis.elements, (ONE,))

    def test_generator_seed_holds_diagonal_function(self):
        seed = schur_generator((1, -2), PARAMS).exponents()
        basis = invariant_subspace_basis(seed, PARAMS)
        self.assertIn(LaurentPoly(1, 1, {(1, -2): 1}), basis.elements)

    def test_seed_length_mismatch(self):
        with self.assertRaises(InvalidInput):
            invariant_subspace_basis([(1, 2, 3)], PARAMS)


class TestGenerators(unittest.TestCase):
    def test_schur_polynomial(self):
        params = DeformedParams(2, 1, 1)
        x1 = LaurentPoly.variable(2, 1, 0)
        x2 = LaurentPoly.variable(2, 1, 1)
        self.assertEqual(schur_polynomial(params, [0, 1], (1, 0)), x1 + x2)
        self.assertEqual(schur_polynomial(params, [0, 1], (1, 1)), x1 * x2)
        self.assertEqual(
            schur_polynomial(params, [0, 1], (2, 0)), x1 * x1 + x1 * x2 + x2 * x2
        )

    def test_schur_generator_is_quasi_invariant(self):
        generator = schur_generator((0, 0), PARAMS)
        expected = LaurentPoly(1, 1, {(0, 0): 1, (-1, 1): -2, (-2, 2): 1})
        self.assertEqual(generator, expected)
        self.assertTrue(is_quasi_invariant(generator, PARAMS))
        expanded = schur_generator((2, 1), PARAMS)
        self.assertEqual(expanded, LaurentPoly(1, 1, {(2, 1): 1, (1, 2): -2, (0, 3): 1}))
        other = schur_generator((1, 0, 3), DeformedParams(2, 1, QQ(1, 3)))
        self.assertTrue(is_quasi_invariant(other, DeformedParams(2, 1, QQ(1, 3))))

    def test_schur_generator_top_term(self):
        cases = [
            (PARAMS, (2, -1)),
            (DeformedParams(2, 1, QQ(3, 7)), (2, 0, 1)),
            (DeformedParams(1, 2, QQ(-5, 3)), (1, 3, -2)),
            (DeformedParams(2, 2, QQ(2)), (1, 1, 0, -1)),
        ]
        for params, weight in cases:
            generator = schur_generator(weight, params)
            self.assertEqual(max_exponents(generator), {weight})
            self.assertEqual(generator.coefficient(weight), 1)

    def test_schur_generator_needs_dominant_weight(self):
        with self.assertRaises(InvalidWeight):
            schur_generator((0, 1, 0), DeformedParams(2, 1, 1))
