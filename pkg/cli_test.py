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


import io
import os
import tempfile
import unittest

import mock
import simplejson as json

import cli
from common import RunConfig


@mock.patch("common.CMS_CONFIG_FILE", "")
@mock.patch("common.CMS_PMAX", "")
@mock.patch("common.CMS_OUTPUT", "json")
@mock.patch("common.CMS_K", "-1/2")
@mock.patch("common.CMS_M", "1")
@mock.patch("common.CMS_N", "1")
class TestCli(unittest.TestCase):
    def run_cli(self, argv):
        with mock.patch("sys.stdout", new_callable=io.StringIO) as stdout:
            with mock.patch("sys.stderr", new_callable=io.StringIO):
                code = cli.main(argv)
        return code, stdout.getvalue()

    def run_json(self, argv):
        code, output = self.run_cli(argv)
        return code, json.loads(output)

    def test_oddreflect(self):
        code, report = self.run_json(["oddreflect", "--a", "3,2,5", "--b", "3,1,2,4"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report, {"A": [5, 3, 5], "B": [4, 1, 3, 5]})

    def test_apply(self):
        f = json.dumps({"n": 1, "m": 1, "terms": [{"exp": [1, -1], "coef": "1"}, {"exp": [-1, 1], "coef": "1"}]})
        code, report = self.run_json(["apply", "--f", f, "--p", "1,2"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report["images"]["1"]["terms"], [])
        self.assertEqual(report["images"]["2"]["terms"], [{"exp": [0, 0], "coef": "-1/1"}])

    def test_apply_reads_input_file_named_like_a_number(self):
        f = {"n": 1, "m": 1, "terms": [{"exp": [1, -1], "coef": "1"}, {"exp": [-1, 1], "coef": "1"}]}
        previous = os.getcwd()
        with tempfile.TemporaryDirectory() as directory:
            os.chdir(directory)
            try:
                with open("2024.json", "w") as handle:
                    json.dump(f, handle)
                code, report = self.run_json(["apply", "--input", "2024.json", "--p", "2"])
            finally:
                os.chdir(previous)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report["images"]["2"]["terms"], [{"exp": [0, 0], "coef": "-1/1"}])

    def test_missing_input_file(self):
        code, _ = self.run_cli(["apply", "--input", "missing.json", "--p", "2"])
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_hc_eval(self):
        code, report = self.run_json(["hc", "--p", "1,2", "--eval", "[2, 0]"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report["character"], ["2/1", "2/1"])

    def test_apply_division_obstruction(self):
        f = json.dumps({"n": 1, "m": 1, "terms": [{"exp": [1, 0], "coef": "1"}]})
        code, report = self.run_json(["apply", "--f", f, "--p", "2"])
        self.assertEqual(code, cli.EXIT_FAILED)
        self.assertEqual(report["error"], "division-obstruction")
        self.assertEqual((report["i"], report["j"], report["p"]), (0, 1, 2))

    def test_hc_with_character(self):
        code, report = self.run_json(["hc", "--p", "1,2", "--weight", "[2, 0]", "--check-image", "--samples", "2"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report["character"], ["2/1", "2/1"])
        self.assertTrue(report["image_membership"]["2"]["passed"])

    def test_subspace_and_decompose(self):
        code, report = self.run_json(["subspace", "--seed", "[[1, -1]]"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(len(report["basis"]), 2)
        code, report = self.run_json(["decompose", "--seed", "[[1, -1]]"])
        self.assertEqual(report["dimension"], 2)
        self.assertEqual(report["blocks"][0]["reps"], [[1, -1], [0, 0]])
        self.assertEqual(report["blocks"][0]["nilpotency"]["2"], 2)

    def test_class_with_search(self):
        code, report = self.run_json(["class", "--weight", "[0, 0, 0]", "--search"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report["atypicality"], 1)
        self.assertEqual([member["weight"] for member in report["members"]], [[0, 0, 0], [2, -1, -1]])
        self.assertEqual(report["searched"], [[0, 0, 0], [2, -1, -1]])

    def test_class_of_larger_shape(self):
        code, report = self.run_json(["class", "--n", "2", "--m", "2", "--weight", "[4, 2, -2, -2, -3, -3]"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(len(report["members"]), 4)

    def test_typical(self):
        code, report = self.run_json(["typical", "--weight", "[0, 1, 1]"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report["typical"], False)
        self.assertEqual(report["disjoint"], False)

    def test_kacflag_of_atypical_weight(self):
        code, report = self.run_json(["kacflag", "--weight", "[0, 1, 1]"])
        self.assertEqual(code, cli.EXIT_FAILED)
        self.assertEqual(report["error"], "not-typical")

    def test_invalid_weight(self):
        code, report = self.run_json(["class", "--weight", "[1, 0, 0]"])
        self.assertEqual(code, cli.EXIT_FAILED)
        self.assertEqual(report["error"], "invalid-weight")

    def test_gl12_bridge(self):
        code, report = self.run_json(["gl12", "--bridge"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report["bridge"]["coefficients"], ["1/1", "1/4", "1/4", "0/1", "0/1"])
        self.assertTrue(report["bridge"]["certified"])

    def test_gl12_needs_an_action(self):
        code, _ = self.run_cli(["gl12"])
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_usage_errors(self):
        self.assertEqual(self.run_cli(["bogus"])[0], cli.EXIT_USAGE)
        self.assertEqual(self.run_cli(["oddreflect", "--a", "1"])[0], cli.EXIT_USAGE)
        self.assertEqual(self.run_cli(["typical", "--weight", "[0, 0, 0]", "--k", "0"])[0], cli.EXIT_USAGE)
        self.assertEqual(self.run_cli(["verify", "--suite", "nonsense"])[0], cli.EXIT_USAGE)

    def test_negative_k_with_equals(self):
        code, report = self.run_json(["hc", "--p", "1", "--k=-3/4", "--n", "2", "--m", "0"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report["images"]["1"]["vars"], 2)

    def test_table_output(self):
        code, output = self.run_cli(["oddreflect", "--a", "2", "--b", "7", "--output", "table"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(output, "A: [2]\nB: [7]\n")

    @mock.patch("cli.metrics.send")
    @mock.patch("cli.CMS_PROCESS_METRICS", "True")
    def test_verify_sends_metrics(self, mock_send):
        code, report = self.run_json(["verify", "--suite", "oddreflect"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report["suites"][0]["suite"], "oddreflect")
        self.assertTrue(mock_send.called)

    @mock.patch("cli.acceptance.run_suites")
    def test_verify_failure_exit_code(self, mock_run):
        mock_run.return_value = [{"suite": "oddreflect", "passed": False, "checks": 1, "failures": [{}], "findings": []}]
        code, _ = self.run_json(["verify", "--suite", "oddreflect"])
        self.assertEqual(code, cli.EXIT_FAILED)
        config = mock_run.call_args[0][1]
        self.assertIsInstance(config, RunConfig)


class TestRenderTable(unittest.TestCase):
    def test_nested(self):
        lines = cli.render_table({"b": {"x": [1, {"y": 2}]}, "a": 1})
        self.assertEqual(lines, ["a: 1", "b:", "  x:", "    - 1", "    - {\"y\": 2}"])
