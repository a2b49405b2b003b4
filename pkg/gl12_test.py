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

import mock
from sympy.polys.domains import QQ

from cms import LOCALIZED
from cms import apply_integral
from errors import DivisionObstruction
from errors import InvalidInput
from gl12 import BRIDGE_COEFFICIENTS
from gl12 import PARAMS
from gl12 import basis_family
from gl12 import bridge_counterexample
from gl12 import certify_bridge
from gl12 import derive_bridge
from gl12 import l2_explicit
from gl12 import l2_image
from gl12 import l3_explicit
from gl12 import lambda_ij
from gl12 import mu_ij
from gl12 import parse_window
from gl12 import phi
from gl12 import phi_diag
from gl12 import psi
from gl12 import spectral_demo
from gl12 import verify_jordan_table
from harish_chandra import hc_integral
from laurent import LaurentPoly
from laurent import LocalizedFn

X = LaurentPoly.variable(1, 1, 0)


def shifted_lambda(i, j):
    return QQ(i * (i - 1)) - QQ(j * (j + 1), 2) + 1


class TestBasis(unittest.TestCase):
    def test_phi(self):
        self.assertEqual(phi(2, 0).value, LaurentPoly(1, 1, {(2, 0): 1, (1, 1): QQ(-4, 3)}))
        self.assertEqual(phi(0, 0).value, LaurentPoly.constant(1, 1))
        self.assertEqual(phi(2, 0).label(), "phi(2,0)")

    def test_phi_undefined_line(self):
        with self.assertRaises(InvalidInput):
            phi(1, -1)

    def test_psi_and_diagonal(self):
        self.assertEqual(psi(0).value, LaurentPoly(1, 1, {(1, -1): 1, (-1, 1): 1}))
        self.assertEqual(phi_diag(1).value, LaurentPoly(1, 1, {(1, -2): 1}))
        self.assertEqual(psi(2).label(), "psi(2)")

    def test_basis_family(self):
        self.assertEqual(len(basis_family(1)), 13)

    def test_eigenvalues(self):
        self.assertEqual(lambda_ij(2, 0), 2)
        self.assertEqual(lambda_ij(0, 1), -1)
        self.assertEqual(mu_ij(2, 0), QQ(7, 2))
        self.assertEqual(mu_ij(0, 0), 0)


class TestExplicitOperators(unittest.TestCase):
    def test_l2_explicit_matches_integral(self):
        for element in basis_family(1):
            self.assertEqual(
                l2_explicit(element.value), apply_integral(2, element.value, PARAMS), element.label()
            )

    def test_l3_explicit(self):
        self.assertEqual(l3_explicit(phi(2, 0).value), phi(2, 0).value.scale(QQ(7, 2)))
        self.assertFalse(l3_explicit(psi(0).value))
        self.assertFalse(l3_explicit(phi(0, 0).value))

    def test_l3_jordan_coefficient_grows_with_i(self):
        for i in range(-3, 4):
            expected = psi(i).value.scale(-(i ** 3)) - phi_diag(i).value.scale(3 * i)
            self.assertEqual(l3_explicit(psi(i).value), expected, i)
        self.assertEqual(
            l3_explicit(psi(-1).value), LaurentPoly(1, 1, {(0, 1): 1, (-2, 3): 1, (-1, 2): 3})
        )

    def test_strict_obstruction(self):
        with self.assertRaises(DivisionObstruction) as context:
            l2_explicit(X)
        self.assertEqual(context.exception.p, 2)

    def test_localized_mode(self):
        image = l2_explicit(X, LOCALIZED)
        self.assertIsInstance(image, LocalizedFn)
        self.assertEqual(image, LocalizedFn(LaurentPoly(1, 1, {(1, 1): -2}), {(0, 1): 1}))

    def test_l2_image_matches_integral_image(self):
        self.assertEqual(l2_image(), hc_integral(2, PARAMS))


class TestBridge(unittest.TestCase):
    def test_derive_bridge(self):
        self.assertEqual(derive_bridge(), BRIDGE_COEFFICIENTS)

    def test_certify_bridge(self):
        self.assertTrue(certify_bridge())
        self.assertFalse(certify_bridge([1, 0, 0, 0, 0]))

    def test_bridge_on_basis(self):
        self.assertIsNone(bridge_counterexample(1))

    def test_wrong_bridge_has_counterexample(self):
        witness = bridge_counterexample(1, [1, 0, 0, 0, 0])
        self.assertIsNotNone(witness)
        self.assertIn("element", witness)


class TestJordanTable(unittest.TestCase):
    def test_verify_jordan_table(self):
        report = verify_jordan_table(1)
        self.assertTrue(report.passed)
        self.assertEqual(report.checks, 36)
        self.assertIsNone(report.witness)
        self.assertEqual([finding["element"] for finding in report.findings], ["psi(-1)", "psi(0)"])
        self.assertEqual(report.findings[0]["phi_coefficient"], "3/1")
        self.assertEqual(report.to_json()["findings"], report.findings)

    @mock.patch("gl12.lambda_ij", side_effect=shifted_lambda)
    def test_wrong_eigenvalue_is_caught(self, mock_lambda):
        report = verify_jordan_table(1)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness["check"], "L2 phi")
        self.assertEqual(report.witness["element"], "phi(-1,-1)")
        self.assertTrue(mock_lambda.called)

    def test_bound_must_be_positive(self):
        with self.assertRaises(InvalidInput):
            verify_jordan_table(0)


class TestSpectralDemo(unittest.TestCase):
    def test_parse_window(self):
        self.assertEqual(parse_window("-1..2"), (-1, 2))
        self.assertEqual(parse_window("3"), (3, 3))
        for text in ("a..b", "2..1", "1..2..3"):
            with self.assertRaises(InvalidInput):
                parse_window(text)

    def test_degree_zero(self):
        result = spectral_demo((0, 0), radius=3)
        self.assertTrue(result["passed"], result["failures"])
        degree = result["degrees"][0]
        self.assertEqual(degree["dimension"], 6)
        pair = [block for block in degree["blocks"] if block["dim"] == 2]
        self.assertEqual(pair[0]["reps"], [[1, -1], [0, 0]])
        self.assertEqual(pair[0]["nilpotency"]["2"], 2)
