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
import collections.abc

# datadog needs the four following aliases to be done manually.
collections.Iterable = collections.abc.Iterable
collections.Mapping = collections.abc.Mapping
collections.MutableSet = collections.abc.MutableSet
collections.MutableMapping = collections.abc.MutableMapping
import datadog  # noqa
import logging  # noqa
import os  # noqa

LOGGER = logging.getLogger(__name__)


# One passed/failed counter per verify suite, plus an event for each failure.
def send(env, suite_results):
    if "DATADOG_API_KEY" not in os.environ:
        return False
    datadog.initialize()  # by default uses DATADOG_API_KEY

    metrics = []
    for result in suite_results:
        metric_tags = ["env:%s" % env, "suite:%s" % result["suite"]]
        outcome = "passed" if result["passed"] else "failed"
        if not result["passed"]:
            datadog.api.Event.create(
                title="CMS verification suite failed",
                text="Suite %s failed %d of %d checks."
                % (result["suite"], len(result["failures"]), result["checks"]),
                tags=metric_tags,
            )
        metrics.append(
            {
                "metric": "cms_quasi.verify.%s" % outcome,
                "type": "counter",
                "points": 1,
                "tags": metric_tags,
            }
        )
    LOGGER.info("Sending %d metrics to Datadog.", len(metrics))
    datadog.api.Metric.send(metrics)
    return True
