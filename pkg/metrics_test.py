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

import metrics

RESULTS = [
    {"suite": "oddreflect", "passed": True, "checks": 3, "failures": [], "findings": []},
    {"suite": "spectral", "passed": False, "checks": 7, "failures": [{"check": "block dimension"}], "findings": []},
]


class TestMetrics(unittest.TestCase):
    @mock.patch.dict("os.environ", {}, clear=True)
    @mock.patch("metrics.datadog")
    def test_no_api_key(self, mock_datadog):
        self.assertFalse(metrics.send(env="test", suite_results=RESULTS))
        self.assertFalse(mock_datadog.initialize.called)

    @mock.patch.dict("os.environ", {"DATADOG_API_KEY": "key"})
    @mock.patch("metrics.datadog")
    def test_send(self, mock_datadog):
        self.assertTrue(metrics.send(env="test", suite_results=RESULTS))
        mock_datadog.initialize.assert_called_once_with()
        self.assertEqual(mock_datadog.api.Event.create.call_count, 1)
        event = mock_datadog.api.Event.create.call_args[1]
        self.assertEqual(event["tags"], ["env:test", "suite:spectral"])
        self.assertIn("failed 1 of 7", event["text"])
        sent = mock_datadog.api.Metric.send.call_args[0][0]
        self.assertEqual(
            [metric["metric"] for metric in sent],
            ["cms_quasi.verify.passed", "cms_quasi.verify.failed"],
        )
