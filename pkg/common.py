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

import datetime
import logging
import os
from dataclasses import dataclass
from dataclasses import replace

import simplejson as json
from pytz import utc

from cms import DeformedParams
from errors import CmsError
from errors import UsageError
from laurent import Rational
from laurent import to_rational

LOGGER = logging.getLogger(__name__)

CMS_N = os.getenv("CMS_N", "1")
CMS_M = os.getenv("CMS_M", "1")
CMS_K = os.getenv("CMS_K", "-1/2")
CMS_PMAX = os.getenv("CMS_PMAX", "")
CMS_SEED = os.getenv("CMS_SEED", "20140917")
CMS_OUTPUT = os.getenv("CMS_OUTPUT", "json")
CMS_HYPERPLANE_SAMPLES = os.getenv("CMS_HYPERPLANE_SAMPLES", "20")
CMS_CLASS_SEARCH_RADIUS = os.getenv("CMS_CLASS_SEARCH_RADIUS", "6")
CMS_CONFIG_FILE = os.getenv("CMS_CONFIG_FILE", "")
CMS_LOG_LEVEL = os.getenv("CMS_LOG_LEVEL", "WARNING")
CMS_PROCESS_METRICS = os.getenv("CMS_PROCESS_METRICS", "False")

OUTPUT_FORMATS = ("json", "table")
CONFIG_FIELDS = ("n", "m", "k", "pmax", "seed", "output", "samples", "radius")


def get_timestamp():
    return datetime.datetime.now(utc).strftime("%Y/%m/%d %H:%M:%S UTC")


def str_to_bool(s):
    value = str(s).strip().lower()
    if value in ("y", "yes", "t", "true", "on", "1"):
        return True
    if value in ("n", "no", "f", "false", "off", "0", ""):
        return False
    raise UsageError("Not a boolean: %r" % (s,))


@dataclass(frozen=True)
class RunConfig:
    n: int = 1
    m: int = 1
    k: Rational = to_rational("-1/2")
    pmax: int = 4
    seed: int = 20140917
    output: str = "json"
    samples: int = 20
    radius: int = 6

    def validate(self):
        if self.n < 0 or self.m < 0 or self.n + self.m < 1:
            raise UsageError("Need n >= 0, m >= 0 and n + m >= 1, got (%d, %d)" % (self.n, self.m))
        if not self.k:
            raise UsageError("k must be nonzero")
        if self.pmax < 2:
            raise UsageError("pmax must be at least 2, got %d" % self.pmax)
        if self.output not in OUTPUT_FORMATS:
            raise UsageError("Output must be one of %s, got %r" % (", ".join(OUTPUT_FORMATS), self.output))
        if self.samples < 1 or self.radius < 0:
            raise UsageError("samples must be positive and radius nonnegative")
        return self

    def params(self):
        return DeformedParams(self.n, self.m, self.k)

    def to_json(self):
        return {
            "n": self.n,
            "m": self.m,
            "k": "%d/%d" % (int(self.k.numerator), int(self.k.denominator)),
            "pmax": self.pmax,
            "seed": self.seed,
            "output": self.output,
            "samples": self.samples,
            "radius": self.radius,
        }


# Converts raw text or JSON values; every failure is a usage error.
def _coerce(field, value):
    try:
        if field == "k":
            return to_rational(str(value))
        if field == "output":
            return str(value).strip()
        return int(str(value).strip())
    except (CmsError, ValueError) as exc:
        raise UsageError("Bad value %r for %s: %s" % (value, field, exc))


# Flat "key = value" lines; blank lines and "#" comments are skipped.
def load_config_file(path):
    values = {}
    try:
        with open(path) as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise UsageError("Cannot read config file %s: %s" % (path, exc))
    for number, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError("%s:%d: expected key = value" % (path, number))
        key, value = (piece.strip() for piece in line.split("=", 1))
        if key not in CONFIG_FIELDS:
            raise UsageError("%s:%d: unknown key %r" % (path, number, key))
        values[key] = _coerce(key, value)
    return values


def load_params_file(source):
    text = source
    if not source.lstrip().startswith("{"):
        try:
            with open(source) as handle:
                text = handle.read()
        except OSError as exc:
            raise UsageError("Cannot read params %s: %s" % (source, exc))
    try:
        data = json.loads(text)
    except ValueError as exc:
        raise UsageError("Params are not valid JSON: %s" % exc)
    if not isinstance(data, dict):
        raise UsageError("Params must be a JSON object")
    unknown = set(data) - set(CONFIG_FIELDS)
    if unknown:
        raise UsageError("Unknown params keys: %s" % ", ".join(sorted(unknown)))
    return {key: _coerce(key, value) for key, value in data.items()}


def environment_values():
    values = {
        "n": _coerce("n", CMS_N),
        "m": _coerce("m", CMS_M),
        "k": _coerce("k", CMS_K),
        "seed": _coerce("seed", CMS_SEED),
        "output": _coerce("output", CMS_OUTPUT),
        "samples": _coerce("samples", CMS_HYPERPLANE_SAMPLES),
        "radius": _coerce("radius", CMS_CLASS_SEARCH_RADIUS),
    }
    if CMS_PMAX.strip():
        values["pmax"] = _coerce("pmax", CMS_PMAX)
    return values


# Precedence: flags > config file and --params > environment > defaults.
# pmax falls back to 2(n + m) once n and m are settled.
def load_run_config(flags=None, config_file=None, params_file=None):
    values = environment_values()
    config_file = config_file or CMS_CONFIG_FILE
    if config_file:
        values.update(load_config_file(config_file))
    if params_file:
        values.update(load_params_file(params_file))
    for key, value in (flags or {}).items():
        if value is not None:
            values[key] = _coerce(key, value)
    if "pmax" not in values:
        values["pmax"] = 2 * (values["n"] + values["m"])
    config = replace(RunConfig(), **values).validate()
    LOGGER.debug("Run configuration: %s", config.to_json())
    return config
