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


import os
import re
import tempfile
import unittest

import mock
from sympy.polys.domains import QQ

from common import RunConfig
from common import get_timestamp
from common import load_config_file
from common import load_params_file
from common import load_run_config
from common import str_to_bool
from errors import UsageError


class TestCommon(unittest.TestCase):
    def setUp(self):
        self.tempdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tempdir.cleanup)

    def write(self, name, text):
        path = os.path.join(self.tempdir.name, name)
        with open(path, "w") as handle:
            handle.write(text)
        return path

    def test_get_timestamp(self):
        self.assertTrue(
            re.match(r"^\d{4}/\d{2}/\d{2} \d{2}:\d{2}:\d{2} UTC$", get_timestamp())
        )

    def test_str_to_bool(self):
        self.assertTrue(str_to_bool("True"))
        self.assertTrue(str_to_bool(" yes "))
        self.assertFalse(str_to_bool("False"))
        self.assertFalse(str_to_bool(""))
        with self.assertRaises(UsageError):
            str_to_bool("maybe")

    @mock.patch("common.CMS_CONFIG_FILE", "")
    @mock.patch("common.CMS_PMAX", "")
    @mock.patch("common.CMS_K", "-1/2")
    @mock.patch("common.CMS_M", "1")
    @mock.patch("common.CMS_N", "1")
    def test_defaults(self):
        config = load_run_config()
        self.assertEqual((config.n, config.m, config.k), (1, 1, QQ(-1, 2)))
        self.assertEqual(config.pmax, 4)
        self.assertEqual(config.output, "json")

    @mock.patch("common.CMS_CONFIG_FILE", "")
    @mock.patch("common.CMS_PMAX", "")
    @mock.patch("common.CMS_N", "3")
    def test_pmax_follows_shape(self):
        config = load_run_config({"m": "2"})
        self.assertEqual(config.pmax, 10)

    @mock.patch("common.CMS_CONFIG_FILE", "")
    @mock.patch("common.CMS_K", "2")
    def test_precedence(self):
        path = self.write("cms.conf", "# shape\nn = 2\nk = 1/3\n\nradius = 9  # wide\n")
        config = load_run_config({"k": "-3/4", "n": None}, config_file=path)
        self.assertEqual(config.n, 2)
        self.assertEqual(config.k, QQ(-3, 4))
        self.assertEqual(config.radius, 9)

    @mock.patch("common.CMS_CONFIG_FILE", "")
    def test_params_inline_and_file(self):
        config = load_run_config(params_file='{"n": 2, "m": 0, "k": "1/2"}')
        self.assertEqual(config.params().k, QQ(1, 2))
        path = self.write("params.json", '{"n": 0, "m": 3, "k": "-2"}')
        self.assertEqual(load_params_file(path), {"n": 0, "m": 3, "k": QQ(-2)})

    def test_bad_params(self):
        with self.assertRaises(UsageError):
            load_params_file('{"n": 1, "q": 2}')
        with self.assertRaises(UsageError):
            load_params_file("[1, 2]")
        with self.assertRaises(UsageError):
            load_params_file(os.path.join(self.tempdir.name, "missing.json"))

    def test_bad_config_lines(self):
        with self.assertRaises(UsageError):
            load_config_file(self.write("a.conf", "n 2\n"))
        with self.assertRaises(UsageError):
            load_config_file(self.write("b.conf", "colour = red\n"))
        with self.assertRaises(UsageError):
            load_config_file(self.write("c.conf", "k = half\n"))

    @mock.patch("common.CMS_CONFIG_FILE", "")
    def test_validation(self):
        for flags in ({"k": "0"}, {"n": "0", "m": "0"}, {"pmax": "1"}, {"output": "xml"}):
            with self.assertRaises(UsageError):
                load_run_config(flags)

    def test_to_json(self):
        self.assertEqual(RunConfig().to_json()["k"], "-1/2")
